#include "adjointlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adjointlab/errors.hpp"
#include "adjointlab/spectra.hpp"

namespace adjointlab {

Rational default_certify_tolerance() {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 12);
  return Rational(BigInt(1), den);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

namespace {

int decimal_digits(const Rational& tol) {
  int digits = 0;
  Rational scaled = tol;
  while (scaled < 1 && digits < 60) {
    scaled *= 10;
    ++digits;
  }
  return digits;
}

void require_connected(const Graph& g, const AnalysisOptions& options, const char* what) {
  if (!options.allow_disconnected && !is_connected(g)) {
    throw NotConnected(std::string(what) + ": graph is disconnected (guarantees need a connected graph)");
  }
}

std::optional<RealRoot> smallest_in_unit_interval(const Polynomial& p, const Rational& tol) {
  const auto roots = isolate_real_roots_in(p, Rational(0), Rational(1), tol);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

CheckStatus classify(double margin, double band) {
  if (margin > band) return CheckStatus::pass;
  if (margin < -band) return CheckStatus::fail;
  return CheckStatus::inconclusive;
}

struct MarginAttempt {
  std::optional<double> margin;
  bool converged = false;
};

MarginAttempt margin_at(const Polynomial& distinct, double target, DominanceMode mode, double residual_tol,
                        int bits) {
  MarginAttempt out;
  if (distinct.degree() < 2) {
    out.converged = true;
    return out;
  }
  const ComplexRootResult solved = complex_roots_at(distinct, residual_tol, bits);
  out.converged = solved.converged;
  std::size_t nearest = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < solved.roots.size(); ++k) {
    const double d = std::abs(solved.roots[k] - std::complex<double>(target, 0.0));
    if (d < best) {
      best = d;
      nearest = k;
    }
  }
  double extreme = mode == DominanceMode::largest_modulus ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < solved.roots.size(); ++k) {
    if (k == nearest) continue;
    const double m = std::abs(solved.roots[k]);
    extreme = mode == DominanceMode::largest_modulus ? std::max(extreme, m) : std::min(extreme, m);
  }
  out.margin = mode == DominanceMode::largest_modulus ? target - extreme : extreme - std::abs(target);
  return out;
}

}  // namespace

nlohmann::json to_json(const CertifiedValue& v, const Rational& tol) {
  const int digits = decimal_digits(tol);
  return {{"value", to_fixed(v.midpoint(), digits)},
          {"lo", to_fraction(v.lo)},
          {"hi", to_fraction(v.hi)},
          {"exact", v.exact()},
          {"digits", digits},
          {"width_bound", to_fraction(tol)}};
}

std::optional<RealRoot> largest_real_root(const Polynomial& p, const Rational& tol) {
  const auto roots = isolate_real_roots(p, tol);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

CertifiedValue gamma(const Graph& g, const AnalysisOptions& options) {
  require_connected(g, options, "gamma");
  // h has no constant term, so 0 is always a root and the maximum exists.
  return CertifiedValue::from(*largest_real_root(adjoint_polynomial(g), options.tol));
}

CertifiedValue beta_of_polynomial(const Polynomial& independence, const Rational& tol) {
  const auto root = smallest_in_unit_interval(independence, tol);
  if (!root) throw TheoremViolation("independence polynomial has no root in (0,1]");
  return CertifiedValue::from(*root);
}

CertifiedValue beta(const Graph& g, const AnalysisOptions& options) {
  require_connected(g, options, "beta");
  return beta_of_polynomial(independence_polynomial(g), options.tol);
}

CertifiedValue t_value(const Graph& g, const AnalysisOptions& options) {
  if (g.edge_count() == 0) throw DegenerateInput("t_value: graph has no edges");
  return CertifiedValue::from(*largest_real_root(matching_polynomial_modified(g), options.tol));
}

DominanceResult dominance_of_root(const Polynomial& p, const RealRoot& target, DominanceMode mode,
                                  const AnalysisOptions& options) {
  DominanceResult result;
  result.simple = target.multiplicity == 1;
  const Polynomial distinct = squarefree_part(p);
  const double value = target.approx();

  MarginAttempt attempt = margin_at(distinct, value, mode, options.residual_tol, 53);
  result.precision_bits = 53;
  const bool needs_retry =
      !attempt.converged || (attempt.margin && classify(*attempt.margin, options.margin) == CheckStatus::inconclusive);
  if (needs_retry) {
    attempt = margin_at(distinct, value, mode, options.residual_tol, 106);
    result.precision_bits = 106;
  }
  result.solver_converged = attempt.converged;
  result.margin = attempt.margin;

  if (!result.margin) {
    result.status = result.simple ? CheckStatus::pass : CheckStatus::fail;
  } else if (!attempt.converged) {
    result.status = CheckStatus::inconclusive;
  } else {
    result.status = classify(*result.margin, options.margin);
  }
  if (!result.simple) result.status = CheckStatus::fail;
  return result;
}

DominanceResult dominance_check(const Graph& g, const AnalysisOptions& options) {
  require_connected(g, options, "dominance_check");
  const Polynomial h = adjoint_polynomial(g);
  return dominance_of_root(h, *largest_real_root(h, options.tol), DominanceMode::largest_modulus, options);
}

double reciprocal_gap_bound(const CertifiedValue& a, const CertifiedValue& b) {
  if (b.lo <= 0) throw std::domain_error("reciprocal_gap_bound: interval for b must be positive");
  const Rational inv_lo = 1 / b.hi;
  const Rational inv_hi = 1 / b.lo;
  const Rational gap = std::max(Rational(abs(a.hi - inv_lo)), Rational(abs(inv_hi - a.lo)));
  return gap.get_d();
}

bool beta_gamma_reciprocity(const Graph& g, const VertexOrdering& ord, const AnalysisOptions& options) {
  if (g.edge_count() == 0) throw DegenerateInput("beta_gamma_reciprocity: graph has no edges");
  const CertifiedValue gam = gamma(g, options);
  if (gam.hi <= 0) throw DegenerateInput("beta_gamma_reciprocity: gamma is 0");
  const HatGraph hat = hat_of(g, ord);
  const CertifiedValue bet = beta_of_polynomial(independence_polynomial(hat.graph), options.tol);
  return reciprocal_gap_bound(bet, gam) <= options.margin;
}

RootReport analyze_roots(const Graph& g, const VertexOrdering& ord, const AnalysisOptions& options) {
  RootReport r;
  r.order = g.order();
  r.max_degree = max_degree(g);
  r.connected = is_connected(g);
  require_connected(g, options, "analyze_roots");
  if (!r.connected) r.warnings.push_back("graph is disconnected; corollary guarantees do not apply");

  const Polynomial h = adjoint_polynomial(g);
  const RealRoot top = *largest_real_root(h, options.tol);
  r.gamma = CertifiedValue::from(top);
  r.gamma_multiplicity = top.multiplicity;
  r.gamma_dominance = dominance_of_root(h, top, DominanceMode::largest_modulus, options);

  const Polynomial indep = independence_polynomial(g);
  if (const auto b = smallest_in_unit_interval(indep, options.tol)) {
    r.beta_graph = CertifiedValue::from(*b);
    r.beta_graph_multiplicity = b->multiplicity;
    r.beta_graph_minimality = dominance_of_root(indep, *b, DominanceMode::smallest_modulus, options);
  } else {
    r.warnings.push_back("I(G,x) has no root in (0,1]");
  }

  if (g.edge_count() > 0) {
    const HatGraph hat = hat_of(g, ord);
    if (const auto b = smallest_in_unit_interval(independence_polynomial(hat.graph), options.tol)) {
      r.beta = CertifiedValue::from(*b);
      if (r.gamma->lo > 0) r.reciprocity_gap = reciprocal_gap_bound(*r.beta, *r.gamma);
    } else {
      r.warnings.push_back("I(hat G,x) has no root in (0,1]");
    }

    const Polynomial m = matching_polynomial_modified(g);
    r.t = CertifiedValue::from(*largest_real_root(m, options.tol));
    r.matching_real_rooted = real_root_count_with_multiplicity(m) == m.degree();
    r.matching_bound = 4 * (r.max_degree - 1);
    const Rational slack(options.margin);
    r.gamma_le_t = r.gamma->lo <= r.t->hi + slack ? CheckStatus::pass : CheckStatus::fail;
    // The 4(Delta-1) bound needs Delta >= 2: for K2, t = 1 > 0.
    if (r.max_degree >= 2) {
      r.t_le_bound = r.t->lo <= Rational(r.matching_bound) + slack ? CheckStatus::pass : CheckStatus::fail;
    }
  }
  return r;
}

namespace {

nlohmann::json optional_value(const std::optional<CertifiedValue>& v, const Rational& tol) {
  return v ? to_json(*v, tol) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const DominanceResult& d) {
  return {{"status", to_string(d.status)},
          {"simple", d.simple},
          {"margin", d.margin ? nlohmann::json(*d.margin) : nlohmann::json(nullptr)},
          {"precision_bits", d.precision_bits},
          {"solver_converged", d.solver_converged}};
}

}  // namespace

nlohmann::json to_json(const RootReport& r, const Rational& tol) {
  return {{"n", r.order},
          {"max_degree", r.max_degree},
          {"connected", r.connected},
          {"gamma", optional_value(r.gamma, tol)},
          {"gamma_multiplicity", r.gamma_multiplicity},
          {"gamma_dominance", to_json(r.gamma_dominance)},
          {"beta", optional_value(r.beta, tol)},
          {"beta_graph", optional_value(r.beta_graph, tol)},
          {"beta_graph_multiplicity", r.beta_graph_multiplicity},
          {"beta_graph_minimality", to_json(r.beta_graph_minimality)},
          {"reciprocity_gap", r.reciprocity_gap ? nlohmann::json(*r.reciprocity_gap) : nlohmann::json(nullptr)},
          {"t", optional_value(r.t, tol)},
          {"matching_real_rooted", r.matching_real_rooted},
          {"matching_bound", r.matching_bound},
          {"bounds", {{"gamma_le_t", to_string(r.gamma_le_t)}, {"t_le_4_delta_minus_1", to_string(r.t_le_bound)}}},
          {"warnings", r.warnings}};
}

SeriesReport series_ratio(const Polynomial& numer, const Polynomial& denom, int terms) {
  if (terms < 1) throw std::invalid_argument("series_ratio: need at least one term");
  if (denom[0] == 0) throw std::invalid_argument("series_ratio: denominator has zero constant term");
  SeriesReport out;
  out.coeffs.reserve(static_cast<std::size_t>(terms));
  const auto note = [&](int k) {
    const Rational& c = out.coeffs.back();
    if (!out.first_violation_index && !(c > 0 && c.get_den() == 1)) out.first_violation_index = k;
  };
  // Unit constant term (every h* and I): the recurrence stays in Z.
  if (abs(denom[0]) == 1) {
    const int sign = sgn(denom[0]);
    std::vector<BigInt> c(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
      BigInt acc = numer[k];
      for (int i = 1; i <= std::min(k, denom.degree()); ++i) acc -= denom[i] * c[k - i];
      if (sign < 0) acc = -acc;
      c[k] = acc;
      out.coeffs.emplace_back(acc);
      note(k);
    }
  } else {
    const Rational d0(denom[0]);
    for (int k = 0; k < terms; ++k) {
      Rational c(numer[k]);
      for (int i = 1; i <= std::min(k, denom.degree()); ++i) c -= Rational(denom[i]) * out.coeffs[k - i];
      c /= d0;
      out.coeffs.push_back(c);
      note(k);
    }
  }
  out.all_positive_integers = !out.first_violation_index.has_value();
  return out;
}

nlohmann::json to_json(const SeriesReport& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : s.coeffs) coeffs.push_back(to_fraction(c));
  return {{"coeffs", coeffs},
          {"all_positive_integers", s.all_positive_integers},
          {"first_violation_index",
           s.first_violation_index ? nlohmann::json(*s.first_violation_index) : nlohmann::json(nullptr)}};
}

bool subgraph_gamma_monotonicity(const Graph& g, const Graph& sub, const std::vector<int>& vertex_map,
                                 const AnalysisOptions& options) {
  require_connected(g, options, "subgraph_gamma_monotonicity");
  std::vector<int> map = vertex_map;
  if (map.empty()) {
    map.resize(static_cast<std::size_t>(sub.order()));
    for (int v = 0; v < sub.order(); ++v) map[v] = v;
  }
  if (static_cast<int>(map.size()) != sub.order() || sub.order() > g.order()) {
    throw std::invalid_argument("subgraph_gamma_monotonicity: vertex map does not fit");
  }
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (int v : map) {
    if (v < 0 || v >= g.order() || used[v]) throw std::invalid_argument("subgraph_gamma_monotonicity: map not injective");
    used[v] = true;
  }
  for (const Edge& e : sub.edges()) {
    if (!g.has_edge(map[e.u], map[e.v])) {
      throw std::invalid_argument("subgraph_gamma_monotonicity: " + to_string(e) + " has no image edge");
    }
  }
  if (sub.order() == g.order() && sub.edge_count() == g.edge_count()) {
    throw std::invalid_argument("subgraph_gamma_monotonicity: subgraph is not proper");
  }
  AnalysisOptions loose = options;
  loose.allow_disconnected = true;
  const CertifiedValue outer = gamma(g, options);
  const CertifiedValue inner = gamma(sub, loose);
  return Rational(outer.lo - inner.hi).get_d() > options.margin;
}

}  // namespace adjointlab
