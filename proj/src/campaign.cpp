#include "adjointlab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "adjointlab/bijection.hpp"
#include "adjointlab/errors.hpp"
#include "adjointlab/graph_io.hpp"
#include "adjointlab/roots.hpp"
#include "adjointlab/spectra.hpp"

namespace adjointlab {

namespace {

struct CheckInfo {
  const char* name;
  Suite suite;
};

constexpr std::array<CheckInfo, kCheckCount> kChecks{{
    {"identity.hstar_equals_hat_independence", Suite::identity},
    {"identity.hat_spanning_line_graph", Suite::identity},
    {"identity.edge_deletion_subgraph", Suite::identity},
    {"identity.edge_deletion_induced", Suite::identity},
    {"identity.hat_connected", Suite::identity},
    {"bijection.size_shift", Suite::bijection},
    {"bijection.inverse_after_forward", Suite::bijection},
    {"bijection.forward_after_inverse", Suite::bijection},
    {"bijection.count_identity", Suite::bijection},
    {"chromatic.falling_factorial_identity", Suite::chromatic},
    {"oracle.cover_spectrum", Suite::oracle},
    {"oracle.cover_edge_counts", Suite::oracle},
    {"oracle.independence_spectrum", Suite::oracle},
    {"oracle.matching_spectrum", Suite::oracle},
    {"oracle.matching_line_graph", Suite::oracle},
    {"corollaries.gamma_simple", Suite::corollaries},
    {"corollaries.gamma_dominant", Suite::corollaries},
    {"corollaries.beta_in_unit_interval", Suite::corollaries},
    {"corollaries.beta_simple", Suite::corollaries},
    {"corollaries.beta_minimal_modulus", Suite::corollaries},
    {"corollaries.beta_gamma_reciprocity", Suite::corollaries},
    {"corollaries.gamma_le_t", Suite::corollaries},
    {"corollaries.t_le_matching_bound", Suite::corollaries},
    {"corollaries.matching_real_rooted", Suite::corollaries},
    {"corollaries.gamma_monotone_edge_deletion", Suite::corollaries},
    {"corollaries.series_hstar_edge_deletion", Suite::corollaries},
    {"corollaries.series_independence_induced", Suite::corollaries},
}};

constexpr std::array<std::pair<const char*, Suite>, 5> kSuiteNames{{
    {"identity", Suite::identity},
    {"bijection", Suite::bijection},
    {"corollaries", Suite::corollaries},
    {"chromatic", Suite::chromatic},
    {"oracle", Suite::oracle},
}};

bool has(SuiteSet set, Suite s) { return (set & static_cast<unsigned>(s)) != 0; }

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<int> one_based(const VertexOrdering& ord) {
  std::vector<int> out = ord.permutation();
  for (int& v : out) ++v;
  return out;
}

nlohmann::json poly_json(const Polynomial& p) { return to_json(p)["coeffs"]; }

nlohmann::json value_json(const CertifiedValue& v) {
  return {{"lo", to_fraction(v.lo)}, {"hi", to_fraction(v.hi)}, {"approx", v.approx()}};
}

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u + 1, e.v + 1}); }

// Per-graph evaluation state; polynomials are computed on first use.
class GraphChecker {
 public:
  GraphChecker(const Graph& g, const CampaignConfig& config, GraphOutcome& out)
      : g_(g), config_(config), out_(out), graph6_(emit_graph6(g)) {
    options_.tol = config.tol;
    options_.margin = config.margin;
  }

  template <class DataFn>
  void record(CheckId id, CheckStatus status, const VertexOrdering* ord, DataFn&& data) {
    out_.tallies[static_cast<std::size_t>(id)].add(status);
    if (status != CheckStatus::fail && status != CheckStatus::inconclusive) return;
    const auto already = std::count_if(out_.witnesses.begin(), out_.witnesses.end(),
                                       [&](const Witness& w) { return w.check == id; });
    if (already >= config_.max_witnesses_per_check) return;
    Witness w;
    w.check = id;
    w.graph6 = graph6_;
    w.ordering = ord ? ord->permutation() : VertexOrdering::identity(g_.order()).permutation();
    w.data = data();
    w.data["status"] = to_string(status);
    out_.witnesses.push_back(std::move(w));
  }

  void record(CheckId id, bool ok, const VertexOrdering* ord) {
    record(id, ok ? CheckStatus::pass : CheckStatus::fail, ord, [] { return nlohmann::json::object(); });
  }

  // Runs `body`; a cap overflow marks `ids` skipped, any other exception
  // fails them with the message attached.
  template <class Body>
  void guarded(std::initializer_list<CheckId> ids, const VertexOrdering* ord, Body&& body) {
    try {
      body();
    } catch (const CapExceeded&) {
      for (CheckId id : ids) out_.tallies[static_cast<std::size_t>(id)].add(CheckStatus::not_applicable);
    } catch (const std::exception& e) {
      const std::string what = e.what();
      for (CheckId id : ids) record(id, CheckStatus::fail, ord, [&] { return nlohmann::json{{"error", what}}; });
    }
  }

  void identity_suite(const std::vector<VertexOrdering>& orderings);
  void bijection_suite(const std::vector<VertexOrdering>& orderings);
  void chromatic_suite();
  void oracle_suite();
  void corollaries_suite(const std::vector<VertexOrdering>& orderings, const GammaLookup& lookup);

 private:
  const CoverSpectrum& covers() {
    if (!covers_) covers_ = clique_cover_spectrum(g_);
    return *covers_;
  }

  void deletion_check(const VertexOrdering& ord);

  const Graph& g_;
  const CampaignConfig& config_;
  GraphOutcome& out_;
  std::string graph6_;
  AnalysisOptions options_;
  std::optional<CoverSpectrum> covers_;
};

// hat(G - e) against hat(G), where e joins the last two ordering positions.
void GraphChecker::deletion_check(const VertexOrdering& ord) {
  const int n = g_.order();
  const int a = ord.vertex_at(n - 2);
  const int b = ord.vertex_at(n - 1);
  const Edge e{std::min(a, b), std::max(a, b)};
  guarded({CheckId::edge_deletion_subgraph, CheckId::edge_deletion_induced}, &ord, [&] {
    const Graph smaller = delete_edge(g_, e);
    const HatGraph whole = hat_of(g_, ord, config_.hat_rule);
    if (smaller.edge_count() == 0) {
      record(CheckId::edge_deletion_subgraph, true, &ord);
      record(CheckId::edge_deletion_induced, true, &ord);
      return;
    }
    const HatGraph part = hat_of(smaller, ord, config_.hat_rule);
    record(CheckId::edge_deletion_subgraph, is_labeled_subgraph(part, whole) ? CheckStatus::pass : CheckStatus::fail,
           &ord, [&] { return nlohmann::json{{"deleted_edge", edge_json(e)}}; });
    bool induced = part.graph.order() + 1 == whole.graph.order();
    for (int x = 0; induced && x < part.graph.order(); ++x) {
      const int wx = whole.index_of(part.labels[x]);
      for (int y = x + 1; induced && y < part.graph.order(); ++y) {
        const int wy = whole.index_of(part.labels[y]);
        induced = wx >= 0 && wy >= 0 && part.graph.has_edge(x, y) == whole.graph.has_edge(wx, wy);
      }
    }
    record(CheckId::edge_deletion_induced, induced ? CheckStatus::pass : CheckStatus::fail, &ord,
           [&] { return nlohmann::json{{"deleted_edge", edge_json(e)}}; });
  });
}

void GraphChecker::identity_suite(const std::vector<VertexOrdering>& orderings) {
  const int n = g_.order();
  if (g_.edge_count() == 0) {
    // The hat graph of an edgeless graph is empty, with I = 1.
    guarded({CheckId::hstar_equals_hat_independence}, nullptr, [&] {
      const Polynomial hs = h_star(covers());
      for (const auto& ord : orderings) {
        record(CheckId::hstar_equals_hat_independence, hs == Polynomial{1} ? CheckStatus::pass : CheckStatus::fail,
               &ord, [&] { return nlohmann::json{{"hstar", poly_json(hs)}, {"hat_independence", {"1"}}}; });
      }
    });
    return;
  }
  const bool connected = is_connected(g_);
  guarded({CheckId::hstar_equals_hat_independence, CheckId::hat_spanning_line_graph, CheckId::hat_connected}, nullptr,
          [&] {
            const Polynomial hs = h_star(covers());
            const HatGraph line = line_graph(g_);
            for (const auto& ord : orderings) {
              const HatGraph hat = hat_of(g_, ord, config_.hat_rule);
              const Polynomial ih = independence_polynomial(hat.graph);
              record(CheckId::hstar_equals_hat_independence, ih == hs ? CheckStatus::pass : CheckStatus::fail, &ord,
                     [&] { return nlohmann::json{{"hstar", poly_json(hs)}, {"hat_independence", poly_json(ih)}}; });
              const bool spanning = hat.labels == line.labels && is_labeled_subgraph(hat, line);
              record(CheckId::hat_spanning_line_graph, spanning, &ord);
              if (connected) {
                record(CheckId::hat_connected, is_connected(hat.graph), &ord);
              }
            }
          });
  for (const auto& ord : orderings) {
    if (n >= 2 && g_.has_edge(ord.vertex_at(n - 2), ord.vertex_at(n - 1))) deletion_check(ord);
  }
  if (config_.derived_orderings) {
    for (const Edge& e : g_.edges()) deletion_check(VertexOrdering::with_edge_last(n, e));
  }
}

void GraphChecker::bijection_suite(const std::vector<VertexOrdering>& orderings) {
  const std::initializer_list<CheckId> ids{CheckId::bijection_size_shift, CheckId::bijection_inverse_after_forward,
                                           CheckId::bijection_forward_after_inverse, CheckId::bijection_count_identity};
  if (g_.order() > kCoverEnumerationCap || g_.edge_count() > kIndependentSetEnumerationCap) {
    for (CheckId id : ids) out_.tallies[static_cast<std::size_t>(id)].add(CheckStatus::not_applicable);
    return;
  }
  for (const auto& ord : orderings) {
    guarded(ids, &ord, [&] {
      const BijectionReport rep = verify_bijection(g_, ord, config_.hat_rule);
      const auto data = [&] {
        return nlohmann::json{{"covers", rep.covers}, {"independent_sets", rep.independent_sets},
                              {"failures", rep.failures}};
      };
      const auto st = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };
      record(CheckId::bijection_size_shift, st(rep.sizes_shift), &ord, data);
      record(CheckId::bijection_inverse_after_forward, st(rep.inverse_after_forward), &ord, data);
      record(CheckId::bijection_forward_after_inverse, st(rep.forward_after_inverse), &ord, data);
      record(CheckId::bijection_count_identity, st(rep.counts_match), &ord, data);
    });
  }
}

void GraphChecker::chromatic_suite() {
  guarded({CheckId::chromatic_falling_factorial}, nullptr, [&] {
    const bool ok = chromatic_cross_check(g_);
    record(CheckId::chromatic_falling_factorial, ok ? CheckStatus::pass : CheckStatus::fail, nullptr, [&] {
      return nlohmann::json{{"falling_factorial_expansion", poly_json(falling_factorial_expansion(covers()))},
                            {"complement_chromatic", poly_json(chromatic_polynomial(complement(g_)))}};
    });
  });
}

void GraphChecker::oracle_suite() {
  const auto counts = [](const std::vector<BigInt>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const BigInt& c : v) out.push_back(to_decimal(c));
    return out;
  };
  guarded({CheckId::oracle_cover_spectrum}, nullptr, [&] {
    const CoverSpectrum naive = naive_cover_spectrum(g_);
    record(CheckId::oracle_cover_spectrum, naive == covers() ? CheckStatus::pass : CheckStatus::fail, nullptr,
           [&] { return nlohmann::json{{"fast", counts(covers().counts)}, {"naive", counts(naive.counts)}}; });
  });
  guarded({CheckId::oracle_cover_edge_counts}, nullptr, [&] {
    const int n = g_.order();
    bool ok = covers()[n] == 1 && covers()[0] == 0;
    if (n >= 2) ok = ok && covers()[n - 1] == g_.edge_count();
    record(CheckId::oracle_cover_edge_counts, ok ? CheckStatus::pass : CheckStatus::fail, nullptr,
           [&] { return nlohmann::json{{"counts", counts(covers().counts)}, {"edges", g_.edge_count()}}; });
  });
  guarded({CheckId::oracle_independence_spectrum}, nullptr, [&] {
    const IndependenceSpectrum fast = independence_spectrum(g_);
    const IndependenceSpectrum naive = naive_independence_spectrum(g_);
    record(CheckId::oracle_independence_spectrum, fast == naive ? CheckStatus::pass : CheckStatus::fail, nullptr,
           [&] { return nlohmann::json{{"fast", counts(fast.counts)}, {"naive", counts(naive.counts)}}; });
  });
  guarded({CheckId::oracle_matching_spectrum, CheckId::oracle_matching_line_graph}, nullptr, [&] {
    const MatchingSpectrum fast = matching_spectrum(g_);
    const MatchingSpectrum naive = naive_matching_spectrum(g_);
    record(CheckId::oracle_matching_spectrum, fast == naive ? CheckStatus::pass : CheckStatus::fail, nullptr,
           [&] { return nlohmann::json{{"fast", counts(fast.counts)}, {"naive", counts(naive.counts)}}; });
    IndependenceSpectrum line{{BigInt(1)}};
    if (g_.edge_count() > 0) line = independence_spectrum(line_graph(g_).graph);
    record(CheckId::oracle_matching_line_graph, fast.counts == line.counts ? CheckStatus::pass : CheckStatus::fail,
           nullptr, [&] { return nlohmann::json{{"matching", counts(fast.counts)}, {"line_graph", counts(line.counts)}}; });
  });
}

void GraphChecker::corollaries_suite(const std::vector<VertexOrdering>& orderings, const GammaLookup& lookup) {
  if (!is_connected(g_)) return;
  const int n = g_.order();
  const Rational slack(config_.margin);

  std::optional<RealRoot> top;
  guarded({CheckId::gamma_simple, CheckId::gamma_dominant}, nullptr, [&] {
    const Polynomial h = adjoint_polynomial(covers());
    top = largest_real_root(h, config_.tol);
    record(CheckId::gamma_simple, top->multiplicity == 1 ? CheckStatus::pass : CheckStatus::fail, nullptr,
           [&] { return nlohmann::json{{"h", poly_json(h)}, {"multiplicity", top->multiplicity}}; });
    const DominanceResult dom = dominance_of_root(h, *top, DominanceMode::largest_modulus, options_);
    record(CheckId::gamma_dominant, dom.status, nullptr, [&] {
      return nlohmann::json{{"h", poly_json(h)},
                            {"gamma", value_json(CertifiedValue::from(*top))},
                            {"margin", dom.margin ? nlohmann::json(*dom.margin) : nlohmann::json(nullptr)},
                            {"precision_bits", dom.precision_bits},
                            {"solver_converged", dom.solver_converged}};
    });
  });

  guarded({CheckId::beta_in_unit_interval, CheckId::beta_simple, CheckId::beta_minimal_modulus}, nullptr, [&] {
    const Polynomial indep = independence_polynomial(g_);
    const auto roots = isolate_real_roots_in(indep, Rational(0), Rational(1), config_.tol);
    record(CheckId::beta_in_unit_interval, roots.empty() ? CheckStatus::fail : CheckStatus::pass, nullptr,
           [&] { return nlohmann::json{{"independence", poly_json(indep)}}; });
    if (roots.empty()) return;
    const RealRoot& b = roots.front();
    record(CheckId::beta_simple, b.multiplicity == 1 ? CheckStatus::pass : CheckStatus::fail, nullptr,
           [&] { return nlohmann::json{{"independence", poly_json(indep)}, {"multiplicity", b.multiplicity}}; });
    const DominanceResult dom = dominance_of_root(indep, b, DominanceMode::smallest_modulus, options_);
    record(CheckId::beta_minimal_modulus, dom.status, nullptr, [&] {
      return nlohmann::json{{"independence", poly_json(indep)},
                            {"beta", value_json(CertifiedValue::from(b))},
                            {"margin", dom.margin ? nlohmann::json(*dom.margin) : nlohmann::json(nullptr)},
                            {"precision_bits", dom.precision_bits}};
    });
  });

  if (g_.edge_count() == 0 || !top) return;
  const CertifiedValue gam = CertifiedValue::from(*top);

  // Identical hat polynomials (the usual case) share one isolation.
  std::vector<std::pair<Polynomial, std::optional<RealRoot>>> seen;
  for (const auto& ord : orderings) {
    guarded({CheckId::beta_gamma_reciprocity}, &ord, [&] {
      const HatGraph hat = hat_of(g_, ord, config_.hat_rule);
      const Polynomial ih = independence_polynomial(hat.graph);
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == ih; });
      if (it == seen.end()) {
        const auto roots = isolate_real_roots_in(ih, Rational(0), Rational(1), config_.tol);
        seen.emplace_back(ih, roots.empty() ? std::nullopt : std::optional<RealRoot>(roots.front()));
        it = std::prev(seen.end());
      }
      std::optional<double> gap;
      if (it->second && gam.lo > 0) gap = reciprocal_gap_bound(CertifiedValue::from(*it->second), gam);
      const bool ok = gap && *gap <= config_.margin;
      record(CheckId::beta_gamma_reciprocity, ok ? CheckStatus::pass : CheckStatus::fail, &ord, [&] {
        return nlohmann::json{{"hat_independence", poly_json(ih)},
                              {"gamma", value_json(gam)},
                              {"beta_hat", it->second ? value_json(CertifiedValue::from(*it->second))
                                                      : nlohmann::json(nullptr)},
                              {"gap", gap ? nlohmann::json(*gap) : nlohmann::json(nullptr)}};
      });
    });
  }

  guarded({CheckId::gamma_le_t, CheckId::t_le_matching_bound, CheckId::matching_real_rooted}, nullptr, [&] {
    const Polynomial m = matching_polynomial_modified(g_);
    const CertifiedValue t = CertifiedValue::from(*largest_real_root(m, config_.tol));
    const int delta = max_degree(g_);
    const auto data = [&] {
      return nlohmann::json{{"matching", poly_json(m)}, {"gamma", value_json(gam)}, {"t", value_json(t)},
                            {"max_degree", delta}};
    };
    record(CheckId::gamma_le_t, gam.lo <= t.hi + slack ? CheckStatus::pass : CheckStatus::fail, nullptr, data);
    // 4(Delta - 1) only bounds t once Delta >= 2 (t(K2) = 1).
    if (delta >= 2) {
      record(CheckId::t_le_matching_bound,
             t.lo <= Rational(4 * (delta - 1)) + slack ? CheckStatus::pass : CheckStatus::fail, nullptr, data);
    } else {
      out_.tallies[static_cast<std::size_t>(CheckId::t_le_matching_bound)].add(CheckStatus::not_applicable);
    }
    record(CheckId::matching_real_rooted,
           real_root_count_with_multiplicity(m) == m.degree() ? CheckStatus::pass : CheckStatus::fail, nullptr, data);
  });

  for (const Edge& e : g_.edges()) {
    const Graph smaller = delete_edge(g_, e);
    if (is_connected(smaller)) {
      guarded({CheckId::gamma_monotone_edge_deletion}, nullptr, [&] {
        std::optional<CertifiedValue> inner;
        if (lookup) inner = lookup(smaller);
        if (!inner) inner = CertifiedValue::from(*largest_real_root(adjoint_polynomial(smaller), config_.tol));
        const double margin = Rational(gam.lo - inner->hi).get_d();
        record(CheckId::gamma_monotone_edge_deletion, margin > config_.margin ? CheckStatus::pass : CheckStatus::fail,
               nullptr, [&] {
                 return nlohmann::json{{"deleted_edge", edge_json(e)}, {"gamma", value_json(gam)},
                                       {"gamma_deleted", value_json(*inner)}, {"margin", margin}};
               });
      });
    }
    guarded({CheckId::series_hstar_edge_deletion}, nullptr, [&] {
      const SeriesReport s = series_ratio(h_star(smaller), h_star(covers()), config_.series_terms);
      record(CheckId::series_hstar_edge_deletion, s.all_positive_integers ? CheckStatus::pass : CheckStatus::fail,
             nullptr, [&] {
               return nlohmann::json{{"deleted_edge", edge_json(e)},
                                     {"first_violation_index", *s.first_violation_index},
                                     {"coefficient", to_fraction(s.coeffs[*s.first_violation_index])}};
             });
    });
  }

  if (n <= config_.induced_series_max_n && n >= 2) {
    guarded({CheckId::series_independence_induced}, nullptr, [&] {
      const Polynomial whole = independence_polynomial(g_);
      const VertexMask full = (VertexMask{1} << n) - 1;
      for (VertexMask keep = 1; keep < full; ++keep) {
        const Relabeled sub = induced_subgraph(g_, keep);
        const SeriesReport s = series_ratio(independence_polynomial(sub.graph), whole, config_.series_terms);
        record(CheckId::series_independence_induced, s.all_positive_integers ? CheckStatus::pass : CheckStatus::fail,
               nullptr, [&] {
                 nlohmann::json kept = nlohmann::json::array();
                 for (int v = 0; v < n; ++v) {
                   if ((keep >> v) & 1U) kept.push_back(v + 1);
                 }
                 return nlohmann::json{{"kept_vertices", kept},
                                       {"first_violation_index", *s.first_violation_index},
                                       {"coefficient", to_fraction(s.coeffs[*s.first_violation_index])}};
               });
      }
    });
  }
}

// Calls produce(i) for i in [0, count) on up to `jobs` threads and hands the
// results to consume() in index order, a bounded chunk at a time.
template <class Produce, class Consume>
void ordered_pool(std::size_t count, int jobs, Produce&& produce, Consume&& consume) {
  constexpr std::size_t kChunk = 4096;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), kChunk));
  std::vector<GraphOutcome> results;
  for (std::size_t begin = 0; begin < count; begin += kChunk) {
    const std::size_t end = std::min(count, begin + kChunk);
    results.assign(end - begin, GraphOutcome{});
    if (workers == 1) {
      for (std::size_t i = begin; i < end; ++i) results[i - begin] = produce(i);
    } else {
      std::atomic<std::size_t> next{begin};
      std::exception_ptr error;
      std::mutex error_mutex;
      std::vector<std::thread> threads;
      for (std::size_t t = 0; t < std::min(workers, end - begin); ++t) {
        threads.emplace_back([&] {
          for (std::size_t i = next++; i < end; i = next++) {
            try {
              results[i - begin] = produce(i);
            } catch (...) {
              std::lock_guard<std::mutex> lock(error_mutex);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
      for (auto& th : threads) th.join();
      if (error) std::rethrow_exception(error);
    }
    for (auto& r : results) consume(r);
  }
}

class Accumulator {
 public:
  explicit Accumulator(CampaignReport& report) : report_(report) {}

  void add(const GraphOutcome& o) {
    for (std::size_t k = 0; k < kCheckCount; ++k) report_.tallies[k] += o.tallies[k];
    for (const Witness& w : o.witnesses) {
      int& kept = kept_[static_cast<std::size_t>(w.check)];
      if (kept >= report_.config.max_witnesses_per_check) continue;
      ++kept;
      report_.witnesses.push_back(w);
    }
  }

 private:
  CampaignReport& report_;
  std::array<int, kCheckCount> kept_{};
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CampaignReport empty_report(SuiteSet suites, const CampaignConfig& config, const char* family) {
  CampaignReport r;
  r.suites = suites;
  r.config = config;
  r.family = family;
  r.family_parameters = nlohmann::json::object();
  return r;
}

}  // namespace

const char* check_name(CheckId id) { return kChecks.at(static_cast<std::size_t>(id)).name; }
Suite check_suite(CheckId id) { return kChecks.at(static_cast<std::size_t>(id)).suite; }

SuiteSet parse_suites(const std::string& text) {
  SuiteSet out = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      out |= kAllSuites;
      continue;
    }
    const auto it = std::find_if(kSuiteNames.begin(), kSuiteNames.end(),
                                 [&](const auto& entry) { return item == entry.first; });
    if (it == kSuiteNames.end()) throw std::invalid_argument("unknown suite '" + item + "'");
    out |= static_cast<unsigned>(it->second);
  }
  if (out == 0) throw std::invalid_argument("no suite selected");
  return out;
}

std::string suite_names(SuiteSet suites) {
  std::string out;
  for (const auto& [name, s] : kSuiteNames) {
    if (!has(suites, s)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

void CampaignConfig::validate(bool exhaustive) const {
  if (exhaustive && (max_n < 1 || max_n > 7)) throw std::invalid_argument("max_n must lie in 1..7");
  if (orderings_per_graph < 1) throw std::invalid_argument("orderings_per_graph must be at least 1");
  if (series_terms < 1) throw std::invalid_argument("series_terms must be at least 1");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (!(margin > 0)) throw std::invalid_argument("margin must be positive");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (max_witnesses_per_check < 0) throw std::invalid_argument("max_witnesses_per_check must be non-negative");
}

void CheckTally::add(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: ++pass; break;
    case CheckStatus::fail: ++fail; break;
    case CheckStatus::inconclusive: ++inconclusive; break;
    case CheckStatus::not_applicable: ++skipped; break;
  }
}

CheckTally& CheckTally::operator+=(const CheckTally& o) {
  pass += o.pass;
  fail += o.fail;
  inconclusive += o.inconclusive;
  skipped += o.skipped;
  return *this;
}

std::vector<VertexOrdering> campaign_orderings(const Graph& g, int count, std::uint64_t seed) {
  const int n = g.order();
  std::vector<VertexOrdering> out{VertexOrdering::identity(n)};
  if (count >= 1) out.push_back(VertexOrdering::reversed(n));
  std::uint64_t state = seed ^ fnv1a(emit_graph6(g));
  for (int k = 2; k <= count; ++k) out.push_back(VertexOrdering::shuffled(n, splitmix64(state)));
  return out;
}

GraphOutcome check_graph(const Graph& g, SuiteSet suites, const CampaignConfig& config,
                         const std::vector<VertexOrdering>& orderings, const GammaLookup& gamma_lookup) {
  GraphOutcome out;
  GraphChecker checker(g, config, out);
  if (has(suites, Suite::identity)) checker.identity_suite(orderings);
  if (has(suites, Suite::bijection)) checker.bijection_suite(orderings);
  if (has(suites, Suite::chromatic)) checker.chromatic_suite();
  if (has(suites, Suite::oracle)) checker.oracle_suite();
  if (has(suites, Suite::corollaries)) checker.corollaries_suite(orderings, gamma_lookup);
  return out;
}

bool CampaignReport::any_failure() const {
  return std::any_of(tallies.begin(), tallies.end(), [](const CheckTally& t) { return t.fail > 0; });
}

bool CampaignReport::any_inconclusive() const {
  return std::any_of(tallies.begin(), tallies.end(), [](const CheckTally& t) { return t.inconclusive > 0; });
}

int CampaignReport::exit_code() const {
  if (any_failure()) return 1;
  if (any_inconclusive()) return 6;
  return 0;
}

CampaignReport run_campaign(SuiteSet suites, const CampaignConfig& config) {
  config.validate(true);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report = empty_report(suites, config, "exhaustive");
  report.family_parameters = {{"max_n", config.max_n}, {"connected_only", config.connected_only}};
  Accumulator acc(report);

  for (int n = 1; n <= config.max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    const std::size_t count = std::size_t{1} << pairs;

    // gamma of every connected graph on n vertices, shared by the
    // edge-deletion checks of all supergraphs.
    std::vector<std::optional<CertifiedValue>> gammas;
    GammaLookup lookup;
    if (has(suites, Suite::corollaries)) {
      gammas.resize(count);
      const auto fill = [&](std::size_t mask) {
        const Graph g = Graph::from_edge_mask(n, mask);
        if (is_connected(g)) {
          gammas[mask] = CertifiedValue::from(*largest_real_root(adjoint_polynomial(g), config.tol));
        }
        return GraphOutcome{};
      };
      ordered_pool(count, config.jobs, fill, [](const GraphOutcome&) {});
      lookup = [&gammas, n](const Graph& h) -> std::optional<CertifiedValue> {
        if (h.order() != n) return std::nullopt;
        return gammas[h.edge_mask()];
      };
    }

    std::uint64_t examined = 0;
    ordered_pool(
        count, config.jobs,
        [&](std::size_t mask) {
          const Graph g = Graph::from_edge_mask(n, mask);
          if (config.connected_only && !is_connected(g)) return GraphOutcome{};
          return check_graph(g, suites, config, campaign_orderings(g, config.orderings_per_graph, config.seed),
                             lookup);
        },
        [&](const GraphOutcome& o) { acc.add(o); });
    if (config.connected_only) {
      for_each_labeled_graph(n, true, [&](const Graph&) { ++examined; });
    } else {
      examined = count;
    }
    report.graphs_per_order.emplace_back(n, examined);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

CampaignReport run_sweep(SuiteSet suites, const CampaignConfig& config, const SweepConfig& sweep) {
  config.validate(false);
  if (sweep.n < 1 || sweep.n > kMaxVertices) throw std::invalid_argument("sweep n must lie in 1..62");
  if (sweep.count < 1) throw std::invalid_argument("sweep count must be at least 1");
  if (!(sweep.edge_probability >= 0.0 && sweep.edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report = empty_report(suites, config, "sweep");
  report.family_parameters = {{"n", sweep.n}, {"count", sweep.count}, {"edge_probability", sweep.edge_probability}};
  Accumulator acc(report);

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(sweep.count));
  std::uint64_t state = config.seed;
  for (auto& s : seeds) s = splitmix64(state);

  std::atomic<std::uint64_t> examined{0};
  ordered_pool(
      seeds.size(), config.jobs,
      [&](std::size_t i) {
        const Graph g = random_graph(sweep.n, sweep.edge_probability, seeds[i]);
        if (config.connected_only && !is_connected(g)) return GraphOutcome{};
        ++examined;
        return check_graph(g, suites, config, campaign_orderings(g, config.orderings_per_graph, config.seed));
      },
      [&](const GraphOutcome& o) { acc.add(o); });
  report.graphs_per_order.emplace_back(sweep.n, examined.load());
  report.wall_seconds = seconds_since(start);
  return report;
}

CampaignReport run_on_graphs(SuiteSet suites, const CampaignConfig& config, const std::vector<Graph>& graphs,
                             const std::optional<VertexOrdering>& ordering) {
  config.validate(false);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report = empty_report(suites, config, "explicit");
  report.family_parameters = {{"graphs", graphs.size()}, {"fixed_ordering", ordering.has_value()}};
  if (ordering) {
    report.family_parameters["ordering"] = one_based(*ordering);
    for (const Graph& g : graphs) {
      if (g.order() != ordering->size()) throw std::invalid_argument("ordering length does not match the graph");
    }
  }
  Accumulator acc(report);
  ordered_pool(
      graphs.size(), config.jobs,
      [&](std::size_t i) {
        const Graph& g = graphs[i];
        if (ordering) return check_graph(g, suites, config, {*ordering});
        return check_graph(g, suites, config, campaign_orderings(g, config.orderings_per_graph, config.seed));
      },
      [&](const GraphOutcome& o) { acc.add(o); });
  std::map<int, std::uint64_t> per;
  for (const Graph& g : graphs) ++per[g.order()];
  report.graphs_per_order.assign(per.begin(), per.end());
  report.wall_seconds = seconds_since(start);
  return report;
}

nlohmann::json to_json(const CampaignReport& report) {
  const CampaignConfig& c = report.config;
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& [name, s] : kSuiteNames) {
    if (has(report.suites, s)) suites.push_back(name);
  }

  nlohmann::json checks = nlohmann::json::object();
  CheckTally total;
  for (std::size_t k = 0; k < kCheckCount; ++k) {
    if (!has(report.suites, kChecks[k].suite)) continue;
    const CheckTally& t = report.tallies[k];
    total += t;
    checks[kChecks[k].name] = {{"pass", t.pass}, {"fail", t.fail}, {"inconclusive", t.inconclusive},
                               {"skipped", t.skipped}};
  }

  nlohmann::json by_order = nlohmann::json::object();
  std::uint64_t graphs = 0;
  for (const auto& [n, count] : report.graphs_per_order) {
    by_order[std::to_string(n)] = count;
    graphs += count;
  }

  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : report.witnesses) {
    std::vector<int> ord = w.ordering;
    for (int& v : ord) ++v;
    witnesses.push_back({{"check", check_name(w.check)}, {"graph6", w.graph6}, {"ordering", ord}, {"data", w.data}});
  }

  const char* status = report.any_failure() ? "fail" : report.any_inconclusive() ? "inconclusive" : "pass";
  return {{"suites", suites},
          {"family", report.family},
          {"parameters", report.family_parameters},
          {"config",
           {{"max_n", c.max_n},
            {"orderings_per_graph", c.orderings_per_graph},
            {"seed", c.seed},
            {"series_terms", c.series_terms},
            {"tolerance", to_fraction(c.tol)},
            {"margin", c.margin},
            {"connected_only", c.connected_only},
            {"induced_series_max_n", c.induced_series_max_n},
            {"hat_rule", c.hat_rule == HatRule::standard ? "standard" : "sabotaged"}}},
          {"graphs", {{"total", graphs}, {"by_order", by_order}}},
          {"checks", checks},
          {"summary",
           {{"status", status},
            {"exit_code", report.exit_code()},
            {"pass", total.pass},
            {"fail", total.fail},
            {"inconclusive", total.inconclusive},
            {"skipped", total.skipped}}},
          {"witnesses", witnesses},
          {"timing", {{"wall_seconds", report.wall_seconds}, {"jobs", c.jobs}}}};
}

std::string to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "check,suite,pass,fail,inconclusive,skipped\n";
  for (std::size_t k = 0; k < kCheckCount; ++k) {
    if (!has(report.suites, kChecks[k].suite)) continue;
    const CheckTally& t = report.tallies[k];
    const std::string name = kChecks[k].name;
    out << name << ',' << name.substr(0, name.find('.')) << ',' << t.pass << ',' << t.fail << ',' << t.inconclusive
        << ',' << t.skipped << '\n';
  }
  return out.str();
}

}  // namespace adjointlab
