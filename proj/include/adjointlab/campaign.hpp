#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjointlab/analysis.hpp"
#include "adjointlab/graph.hpp"

namespace adjointlab {

enum class Suite : unsigned {
  identity = 1U << 0,
  bijection = 1U << 1,
  corollaries = 1U << 2,
  chromatic = 1U << 3,
  oracle = 1U << 4,
};
using SuiteSet = unsigned;
inline constexpr SuiteSet kAllSuites = 0x1F;

// Comma-separated suite names, or "all".
SuiteSet parse_suites(const std::string& text);
std::string suite_names(SuiteSet suites);

enum class CheckId : int {
  hstar_equals_hat_independence,
  hat_spanning_line_graph,
  edge_deletion_subgraph,
  edge_deletion_induced,
  hat_connected,
  bijection_size_shift,
  bijection_inverse_after_forward,
  bijection_forward_after_inverse,
  bijection_count_identity,
  chromatic_falling_factorial,
  oracle_cover_spectrum,
  oracle_cover_edge_counts,
  oracle_independence_spectrum,
  oracle_matching_spectrum,
  oracle_matching_line_graph,
  gamma_simple,
  gamma_dominant,
  beta_in_unit_interval,
  beta_simple,
  beta_minimal_modulus,
  beta_gamma_reciprocity,
  gamma_le_t,
  t_le_matching_bound,
  matching_real_rooted,
  gamma_monotone_edge_deletion,
  series_hstar_edge_deletion,
  series_independence_induced,
  count_,
};
inline constexpr std::size_t kCheckCount = static_cast<std::size_t>(CheckId::count_);

// Dotted name, e.g. "identity.hstar_equals_hat_independence".
const char* check_name(CheckId id);
Suite check_suite(CheckId id);

struct CampaignConfig {
  int max_n = 6;
  int orderings_per_graph = 3;
  std::uint64_t seed = 1;
  int series_terms = 20;
  Rational tol = default_certify_tolerance();
  double margin = kMarginTolerance;
  bool connected_only = false;
  // Induced-subgraph series checks only run up to this order.
  int induced_series_max_n = 5;
  int max_witnesses_per_check = 20;
  // Negative control; replaces the hat rule in identity/bijection/corollary checks.
  HatRule hat_rule = HatRule::standard;
  // Besides the given orderings, also check hat(G - e) under an ordering
  // placing e last, for every edge e. Replays of a witness turn this off.
  bool derived_orderings = true;
  int jobs = 1;
  // Where the CLI writes the report; empty means stdout.
  std::string output_path;

  // Throws std::invalid_argument for an out-of-range field.
  void validate(bool exhaustive) const;
};

struct CheckTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t skipped = 0;

  void add(CheckStatus s);
  CheckTally& operator+=(const CheckTally& o);
  std::uint64_t total() const { return pass + fail + inconclusive + skipped; }
};

struct Witness {
  CheckId check{};
  std::string graph6;
  std::vector<int> ordering;  // 0-based positions -> vertices
  nlohmann::json data;
};

struct GraphOutcome {
  std::array<CheckTally, kCheckCount> tallies{};
  std::vector<Witness> witnesses;
};

// gamma of another labeled graph on the same vertex count, by edge mask; used
// to share edge-deletion work across an exhaustive campaign.
using GammaLookup = std::function<std::optional<CertifiedValue>(const Graph&)>;

// The orderings a campaign uses for one graph: identity first, then reverse,
// then shuffles seeded from (seed, graph6, index); `count` excludes identity.
std::vector<VertexOrdering> campaign_orderings(const Graph& g, int count, std::uint64_t seed);

// Runs every check of `suites` on one graph over the given orderings. This
// is also the replay path for a witness.
GraphOutcome check_graph(const Graph& g, SuiteSet suites, const CampaignConfig& config,
                         const std::vector<VertexOrdering>& orderings, const GammaLookup& gamma_lookup = {});

struct CampaignReport {
  SuiteSet suites = 0;
  CampaignConfig config;
  std::string family;  // "exhaustive", "sweep", "explicit"
  nlohmann::json family_parameters;
  std::array<CheckTally, kCheckCount> tallies{};
  std::vector<Witness> witnesses;
  std::vector<std::pair<int, std::uint64_t>> graphs_per_order;
  double wall_seconds = 0.0;

  bool any_failure() const;
  bool any_inconclusive() const;
  // 0 pass, 1 failure, 6 inconclusive only.
  int exit_code() const;
};

// Every labeled graph on 1..max_n vertices (connected only if configured).
CampaignReport run_campaign(SuiteSet suites, const CampaignConfig& config);

struct SweepConfig {
  int n = 8;
  int count = 1000;
  double edge_probability = 0.5;
};

// Random G(n, p) graphs drawn from the configured seed.
CampaignReport run_sweep(SuiteSet suites, const CampaignConfig& config, const SweepConfig& sweep);

// Fixed graph list; with `ordering` set, every graph uses exactly that one.
CampaignReport run_on_graphs(SuiteSet suites, const CampaignConfig& config, const std::vector<Graph>& graphs,
                             const std::optional<VertexOrdering>& ordering = std::nullopt);

// Per-check counters and witnesses, plus config; runtime figures live under
// "timing" so that reports of identical campaigns compare equal without it.
nlohmann::json to_json(const CampaignReport& report);
std::string to_csv(const CampaignReport& report);

}  // namespace adjointlab
