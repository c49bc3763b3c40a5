// adjointlab command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 cap exceeded,
// 4 degenerate input, 5 not connected, 6 inconclusive only.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adjointlab/analysis.hpp"
#include "adjointlab/bigint.hpp"
#include "adjointlab/campaign.hpp"
#include "adjointlab/errors.hpp"
#include "adjointlab/graph.hpp"
#include "adjointlab/graph_io.hpp"
#include "adjointlab/spectra.hpp"

using namespace adjointlab;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kCap = 3, kDegenerate = 4, kConnectivity = 5 };

struct Globals {
  std::string format = "auto";
  std::string tol = "1e-12";
  std::uint64_t seed = 1;
  int max_n = 6;
  int orderings = 3;
  int terms = 20;
  std::string out;
  int jobs = 1;
};

Graph load(const std::string& path, const Globals& g) { return read_graph_file(path, parse_format_name(g.format)); }

Rational tolerance(const Globals& g) {
  const Rational tol = parse_rational(g.tol);
  if (tol <= 0) throw ParseError("--tol must be positive");
  return tol;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

// "identity", "reverse", "random" (seeded) or a 1-based vertex list "3,1,2".
VertexOrdering parse_ordering(const std::string& spec, int n, std::uint64_t seed) {
  if (spec == "identity") return VertexOrdering::identity(n);
  if (spec == "reverse") return VertexOrdering::reversed(n);
  if (spec == "random") return VertexOrdering::shuffled(n, seed);
  std::vector<int> perm;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      perm.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw ParseError("bad ordering entry '" + item + "'");
    }
  }
  if (static_cast<int>(perm.size()) != n) throw ParseError("ordering must list all " + std::to_string(n) + " vertices");
  try {
    return VertexOrdering(std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ordering: ") + e.what());
  }
}

int jobs_from_env(int fallback) {
  const char* env = std::getenv("ADJOINTLAB_JOBS");
  if (!env || !*env) return fallback;
  try {
    const int j = std::stoi(env);
    if (j >= 1) return j;
  } catch (const std::logic_error&) {
  }
  throw ParseError(std::string("ADJOINTLAB_JOBS must be a positive integer, got '") + env + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjointlab: adjoint polynomials, hat graphs and their root corollaries"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "graph input format: auto, el, g6")->capture_default_str();
  app.add_option("--tol", g.tol, "certified interval width")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for random orderings and sweeps")->capture_default_str();
  app.add_option("--max-n", g.max_n, "largest order in exhaustive campaigns")->capture_default_str();
  app.add_option("--orderings", g.orderings, "sampled orderings per graph")->capture_default_str();
  app.add_option("--terms", g.terms, "series terms K")->capture_default_str();
  app.add_option("--out", g.out, "write the result here instead of stdout");
  app.add_option("--jobs", g.jobs, "worker threads (ADJOINTLAB_JOBS overrides)")->capture_default_str();

  // compute
  auto* compute = app.add_subcommand("compute", "print an exact polynomial as JSON");
  std::string which;
  std::string compute_file;
  int cap = -1;
  compute->add_option("which", which, "adjoint, hstar, indep, matching, chromatic")
      ->required()
      ->check(CLI::IsMember({"adjoint", "hstar", "indep", "matching", "chromatic"}));
  compute->add_option("graph", compute_file, "graph file (.el or .g6)")->required();
  compute->add_option("--cap", cap, "override the size cap of the chosen algorithm");

  // hat
  auto* hat = app.add_subcommand("hat", "print the hat graph as an edge list with its labels");
  std::string hat_file;
  std::string hat_ordering = "identity";
  bool hat_sabotage = false;
  hat->add_option("graph", hat_file)->required();
  hat->add_option("--ordering", hat_ordering, "identity, reverse, random, or a vertex list like 3,1,2")
      ->capture_default_str();
  hat->add_flag("--sabotage", hat_sabotage)->group("");

  // roots
  auto* roots = app.add_subcommand("roots", "gamma, beta, t, dominance and bounds as JSON");
  std::string roots_file;
  std::string roots_ordering = "identity";
  bool force = false;
  roots->add_option("graph", roots_file)->required();
  roots->add_option("--ordering", roots_ordering, "ordering used for the hat graph")->capture_default_str();
  roots->add_flag("--force", force, "analyze a disconnected graph anyway");

  // series
  auto* series = app.add_subcommand("series", "power series of num/den as JSON");
  std::string num_file;
  std::string den_file;
  std::string series_which = "hstar";
  bool series_force = false;
  series->add_option("--num", num_file)->required();
  series->add_option("--den", den_file)->required();
  series->add_option("--which", series_which)->check(CLI::IsMember({"hstar", "indep"}))->capture_default_str();
  series->add_flag("--force", series_force, "allow a disconnected denominator graph");

  // verify and sweep share the campaign knobs.
  std::string suites_text;
  bool connected_only = false;
  bool sabotage = false;
  std::string csv_path;
  std::string replay_graph6;
  std::string replay_file;
  std::string replay_ordering;
  auto* verify = app.add_subcommand("verify", "exhaustive campaign, or a replay of one graph");
  verify->add_option("what", suites_text, "identity, bijection, corollaries, chromatic, oracle, all (comma list ok)")
      ->required();
  verify->add_flag("--connected-only", connected_only);
  verify->add_option("--csv", csv_path, "also write a per-check CSV here");
  verify->add_option("--graph6", replay_graph6, "check this single graph instead of enumerating");
  verify->add_option("--graph", replay_file, "check the graph in this file instead of enumerating");
  verify->add_option("--ordering", replay_ordering, "with --graph6/--graph: use only this ordering (1-based list)");
  verify->add_flag("--sabotage", sabotage)->group("");

  SweepConfig sweep_cfg;
  auto* sweep = app.add_subcommand("sweep", "campaign over random G(n, p) graphs");
  sweep->add_option("what", suites_text)->required();
  sweep->add_option("--n", sweep_cfg.n)->capture_default_str();
  sweep->add_option("--count", sweep_cfg.count)->capture_default_str();
  sweep->add_option("--p", sweep_cfg.edge_probability)->capture_default_str();
  sweep->add_flag("--connected-only", connected_only);
  sweep->add_option("--csv", csv_path);
  sweep->add_flag("--sabotage", sabotage)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*compute) {
      const Graph graph = load(compute_file, g);
      Polynomial p;
      if (which == "adjoint") p = adjoint_polynomial(graph, cap < 0 ? kCliqueCoverCap : cap);
      if (which == "hstar") p = h_star(graph, cap < 0 ? kCliqueCoverCap : cap);
      if (which == "indep") p = independence_polynomial(graph, cap < 0 ? kIndependenceCap : cap);
      if (which == "matching") p = matching_polynomial_modified(graph, cap < 0 ? kMatchingCap : cap);
      if (which == "chromatic") p = chromatic_polynomial(graph, cap < 0 ? kChromaticCap : cap);
      nlohmann::json j = to_json(p);
      j["which"] = which;
      j["n"] = graph.order();
      j["m"] = graph.edge_count();
      j["text"] = p.to_string();
      emit(j.dump(2) + "\n", g.out);
      return kOk;
    }

    if (*hat) {
      const Graph graph = load(hat_file, g);
      const VertexOrdering ord = parse_ordering(hat_ordering, graph.order(), g.seed);
      const HatGraph h = hat_of(graph, ord, hat_sabotage ? HatRule::sabotaged : HatRule::standard);
      std::ostringstream text;
      text << "# hat graph: " << h.graph.order() << " vertices, " << h.graph.edge_count() << " edges\n";
      text << "# ordering";
      for (int v : ord.permutation()) text << ' ' << v + 1;
      text << '\n';
      for (std::size_t k = 0; k < h.labels.size(); ++k) {
        text << "# label " << k + 1 << ' ' << to_string(h.labels[k]) << '\n';
      }
      text << emit_edge_list(h.graph);
      emit(text.str(), g.out);
      return kOk;
    }

    if (*roots) {
      const Graph graph = load(roots_file, g);
      AnalysisOptions opts;
      opts.tol = tolerance(g);
      opts.allow_disconnected = force;
      const VertexOrdering ord = parse_ordering(roots_ordering, graph.order(), g.seed);
      const RootReport r = analyze_roots(graph, ord, opts);
      emit(to_json(r, opts.tol).dump(2) + "\n", g.out);
      return kOk;
    }

    if (*series) {
      const Graph num = load(num_file, g);
      const Graph den = load(den_file, g);
      if (!series_force && !is_connected(den)) throw NotConnected("series: denominator graph is disconnected");
      const bool hs = series_which == "hstar";
      const SeriesReport s = series_ratio(hs ? h_star(num) : independence_polynomial(num),
                                          hs ? h_star(den) : independence_polynomial(den), g.terms);
      nlohmann::json j = to_json(s);
      j["which"] = series_which;
      j["terms"] = g.terms;
      emit(j.dump(2) + "\n", g.out);
      return kOk;
    }

    CampaignConfig config;
    config.max_n = g.max_n;
    config.orderings_per_graph = g.orderings;
    config.seed = g.seed;
    config.series_terms = g.terms;
    config.tol = tolerance(g);
    config.connected_only = connected_only;
    config.hat_rule = sabotage ? HatRule::sabotaged : HatRule::standard;
    config.jobs = jobs_from_env(g.jobs);
    config.output_path = g.out;
    SuiteSet suites = 0;
    try {
      suites = parse_suites(suites_text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }

    CampaignReport report;
    try {
      if (*verify && (!replay_graph6.empty() || !replay_file.empty())) {
        const Graph graph = replay_file.empty() ? parse_graph6(replay_graph6) : load(replay_file, g);
        std::optional<VertexOrdering> ord;
        if (!replay_ordering.empty()) {
          ord = parse_ordering(replay_ordering, graph.order(), g.seed);
          config.derived_orderings = false;
        }
        report = run_on_graphs(suites, config, {graph}, ord);
      } else if (*verify) {
        report = run_campaign(suites, config);
      } else {
        report = run_sweep(suites, config, sweep_cfg);
      }
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const DegenerateInput*>(&e) || dynamic_cast<const NotConnected*>(&e)) throw;
      throw ParseError(e.what());
    }
    emit(to_json(report).dump(2) + "\n", config.output_path);
    if (!csv_path.empty()) emit(to_csv(report), csv_path);
    return report.exit_code();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const NotConnected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConnectivity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
