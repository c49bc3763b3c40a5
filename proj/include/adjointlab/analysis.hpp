#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjointlab/bigint.hpp"
#include "adjointlab/graph.hpp"
#include "adjointlab/polynomial.hpp"
#include "adjointlab/roots.hpp"

namespace adjointlab {

// Width of certified root intervals.
Rational default_certify_tolerance();  // 1e-12
// Strict inequalities must hold by more than this.
inline constexpr double kMarginTolerance = 1e-9;

enum class CheckStatus { pass, fail, inconclusive, not_applicable };
std::string to_string(CheckStatus s);

// A real algebraic number known to lie in [lo, hi].
struct CertifiedValue {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
  static CertifiedValue from(const RealRoot& r) { return {r.lo, r.hi}; }
};

// {"value": decimal, "lo": "p/q", "hi": "p/q", "exact": bool,
//  "digits": d, "width_bound": tol}
nlohmann::json to_json(const CertifiedValue& v, const Rational& tol);

struct AnalysisOptions {
  Rational tol = default_certify_tolerance();
  double margin = kMarginTolerance;
  double residual_tol = 1e-12;
  // Compute gamma/beta on disconnected graphs instead of refusing.
  bool allow_disconnected = false;
};

// Largest real root of h(G,x). Throws NotConnected for a disconnected graph
// unless options.allow_disconnected.
CertifiedValue gamma(const Graph& g, const AnalysisOptions& options = {});
// Smallest root of I(G,x) in (0,1]. Throws TheoremViolation when (0,1]
// holds no root.
CertifiedValue beta(const Graph& g, const AnalysisOptions& options = {});
CertifiedValue beta_of_polynomial(const Polynomial& independence, const Rational& tol);
// Largest real root of M(G,x). Throws DegenerateInput on an edgeless graph.
CertifiedValue t_value(const Graph& g, const AnalysisOptions& options = {});

// Largest real root of p, with its exact multiplicity.
std::optional<RealRoot> largest_real_root(const Polynomial& p, const Rational& tol);

// Modulus comparison of one real root against all other roots of p.
struct DominanceResult {
  CheckStatus status = CheckStatus::not_applicable;
  bool simple = false;
  // largest mode: target - max |other|; smallest mode: min |other| - target.
  // Absent when p has no other root.
  std::optional<double> margin;
  int precision_bits = 53;
  bool solver_converged = true;
};

enum class DominanceMode { largest_modulus, smallest_modulus };

// margin > options.margin passes; margin < -options.margin fails; anything
// in between retries at doubled precision and is inconclusive if unchanged.
DominanceResult dominance_of_root(const Polynomial& p, const RealRoot& target, DominanceMode mode,
                                  const AnalysisOptions& options = {});

// gamma(G) is simple and strictly dominant in modulus among the roots of h.
DominanceResult dominance_check(const Graph& g, const AnalysisOptions& options = {});

// Interval bound on |a - 1/b| for b > 0.
double reciprocal_gap_bound(const CertifiedValue& a, const CertifiedValue& b);

// |beta(hat(G,ord)) - 1/gamma(G)| <= options.margin. Throws DegenerateInput
// for an edgeless graph.
bool beta_gamma_reciprocity(const Graph& g, const VertexOrdering& ord, const AnalysisOptions& options = {});

struct RootReport {
  int order = 0;
  int max_degree = 0;
  bool connected = false;
  std::optional<CertifiedValue> gamma;
  int gamma_multiplicity = 0;
  DominanceResult gamma_dominance;
  // beta of the hat graph (the reciprocal partner of gamma) and of G itself.
  std::optional<CertifiedValue> beta;
  std::optional<CertifiedValue> beta_graph;
  int beta_graph_multiplicity = 0;
  DominanceResult beta_graph_minimality;
  std::optional<double> reciprocity_gap;
  std::optional<CertifiedValue> t;
  bool matching_real_rooted = false;
  // 4(Delta - 1)
  int matching_bound = 0;
  CheckStatus gamma_le_t = CheckStatus::not_applicable;
  CheckStatus t_le_bound = CheckStatus::not_applicable;
  std::vector<std::string> warnings;
};

// Throws NotConnected for a disconnected graph unless allow_disconnected.
RootReport analyze_roots(const Graph& g, const VertexOrdering& ord, const AnalysisOptions& options = {});
nlohmann::json to_json(const RootReport& r, const Rational& tol);

struct SeriesReport {
  std::vector<Rational> coeffs;
  bool all_positive_integers = false;
  std::optional<int> first_violation_index;
};

// First `terms` coefficients of numer/denom as a formal power series.
// Throws std::invalid_argument when denom(0) == 0 or terms < 1.
SeriesReport series_ratio(const Polynomial& numer, const Polynomial& denom, int terms);
nlohmann::json to_json(const SeriesReport& s);

// gamma(sub) < gamma(g) by more than options.margin, where sub embeds in g
// through vertex_map (sub vertex -> g vertex; identity when empty). Isolated
// vertices only multiply h by x, so they leave gamma unchanged. Throws
// std::invalid_argument when sub is not a proper subgraph under the map.
bool subgraph_gamma_monotonicity(const Graph& g, const Graph& sub, const std::vector<int>& vertex_map = {},
                                 const AnalysisOptions& options = {});

}  // namespace adjointlab
