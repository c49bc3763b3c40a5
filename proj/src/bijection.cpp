#include "adjointlab/bijection.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "adjointlab/errors.hpp"

namespace adjointlab {

CliqueCover CliqueCover::canonical(std::vector<std::vector<int>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return {std::move(parts)};
}

IndependentSet IndependentSet::canonical(std::vector<Edge> members) {
  std::sort(members.begin(), members.end());
  return {std::move(members)};
}

void validate_cover(const Graph& g, const CliqueCover& q) {
  VertexMask covered = 0;
  for (const auto& part : q.parts) {
    if (part.empty()) throw std::invalid_argument("cover has an empty part");
    for (std::size_t a = 0; a < part.size(); ++a) {
      const int v = part[a];
      if (v < 0 || v >= g.order()) throw std::invalid_argument("cover names a vertex outside V(G)");
      if ((covered >> v) & 1U) throw std::invalid_argument("cover parts overlap at vertex " + std::to_string(v + 1));
      covered |= VertexMask{1} << v;
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (!g.has_edge(v, part[b])) {
          throw std::invalid_argument("cover part is not a clique: missing " + to_string(Edge(v, part[b])));
        }
      }
    }
  }
  if (covered != g.all_vertices()) throw std::invalid_argument("cover does not cover every vertex");
}

IndependentSet phi_forward(const Graph& g, const CliqueCover& q, const VertexOrdering& ord) {
  validate_cover(g, q);
  std::vector<Edge> members;
  for (const auto& part : q.parts) {
    const int top = *std::max_element(part.begin(), part.end(), [&](int a, int b) {
      return ord.position_of(a) < ord.position_of(b);
    });
    for (int u : part) {
      if (u != top) members.emplace_back(u, top);
    }
  }
  return IndependentSet::canonical(std::move(members));
}

bool is_independent(const HatGraph& hat, const IndependentSet& iset) {
  std::vector<int> idx;
  idx.reserve(iset.members.size());
  for (const Edge& e : iset.members) {
    const int k = hat.index_of(e);
    if (k < 0) return false;
    idx.push_back(k);
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b] || hat.graph.has_edge(idx[a], idx[b])) return false;
    }
  }
  return true;
}

CliqueCover phi_inverse(const Graph& g, const HatGraph& hat, const IndependentSet& iset,
                        const VertexOrdering& ord) {
  if (!iset.members.empty() && !is_independent(hat, iset)) {
    throw std::invalid_argument("phi_inverse: input is not an independent set of the hat graph");
  }
  // K_i: members whose larger-position endpoint is u_i.
  std::map<int, std::vector<int>> groups;
  for (const Edge& e : iset.members) {
    const bool v_is_top = ord.position_of(e.v) > ord.position_of(e.u);
    const int top = v_is_top ? e.v : e.u;
    groups[top].push_back(v_is_top ? e.u : e.v);
  }
  VertexMask used = 0;
  std::vector<std::vector<int>> parts;
  for (auto& [top, rest] : groups) {
    rest.push_back(top);
    for (int v : rest) used |= VertexMask{1} << v;
    parts.push_back(std::move(rest));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!((used >> v) & 1U)) parts.push_back({v});
  }
  CliqueCover q = CliqueCover::canonical(std::move(parts));
  validate_cover(g, q);
  return q;
}

void for_each_clique_cover(const Graph& g, const std::function<void(const CliqueCover&)>& visit, int cap) {
  if (g.order() > cap) throw CapExceeded("enumerate_clique_covers", g.order(), cap);
  const int n = g.order();
  std::vector<VertexMask> blocks;
  std::vector<int> assign(n, -1);

  // Restricted growth strings, pruned as soon as a block stops being a clique.
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      std::vector<std::vector<int>> parts(blocks.size());
      for (int u = 0; u < n; ++u) parts[assign[u]].push_back(u);
      visit(CliqueCover{std::move(parts)});
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if ((blocks[b] & ~g.neighbors(v)) != 0) continue;
      blocks[b] |= VertexMask{1} << v;
      assign[v] = static_cast<int>(b);
      extend(v + 1);
      blocks[b] &= ~(VertexMask{1} << v);
    }
    blocks.push_back(VertexMask{1} << v);
    assign[v] = static_cast<int>(blocks.size()) - 1;
    extend(v + 1);
    blocks.pop_back();
  };
  extend(0);
}

std::vector<CliqueCover> enumerate_clique_covers(const Graph& g, int cap) {
  std::vector<CliqueCover> out;
  for_each_clique_cover(g, [&](const CliqueCover& q) { out.push_back(q); }, cap);
  return out;
}

void for_each_independent_set(const Graph& g, const std::function<void(VertexMask)>& visit, int cap) {
  if (g.order() > cap) throw CapExceeded("enumerate_independent_sets", g.order(), cap);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t s = 0; s < total; ++s) {
    bool independent = true;
    for (std::uint64_t r = s; r != 0 && independent; r &= r - 1) {
      independent = (g.neighbors(std::countr_zero(r)) & s) == 0;
    }
    if (independent) visit(s);
  }
}

std::vector<IndependentSet> enumerate_independent_sets(const HatGraph& hat, int cap) {
  std::vector<IndependentSet> out;
  for_each_independent_set(
      hat.graph,
      [&](VertexMask s) {
        std::vector<Edge> members;
        for (; s != 0; s &= s - 1) members.push_back(hat.labels[std::countr_zero(s)]);
        out.push_back(IndependentSet::canonical(std::move(members)));
      },
      cap);
  return out;
}

CoverSpectrum naive_cover_spectrum(const Graph& g, int cap) {
  CoverSpectrum out;
  out.counts.assign(static_cast<std::size_t>(g.order()) + 1, 0);
  for_each_clique_cover(g, [&](const CliqueCover& q) { ++out.counts[q.parts.size()]; }, cap);
  return out;
}

IndependenceSpectrum naive_independence_spectrum(const Graph& g, int cap) {
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order()) + 1, 0);
  for_each_independent_set(g, [&](VertexMask s) { ++counts[std::popcount(s)]; }, cap);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return {std::move(counts)};
}

MatchingSpectrum naive_matching_spectrum(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order() / 2) + 1, 0);
  std::function<void(std::size_t, VertexMask, int)> walk = [&](std::size_t idx, VertexMask used, int size) {
    if (idx == edges.size()) {
      ++counts[size];
      return;
    }
    walk(idx + 1, used, size);
    const VertexMask ends = (VertexMask{1} << edges[idx].u) | (VertexMask{1} << edges[idx].v);
    if ((used & ends) == 0) walk(idx + 1, used | ends, size + 1);
  };
  walk(0, 0, 0);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return {std::move(counts)};
}

namespace {

std::string describe(const CliqueCover& q) { return to_json(q).dump(); }
std::string describe(const IndependentSet& s) { return to_json(s).dump(); }

void note(BijectionReport& r, std::string msg) {
  constexpr std::size_t kMaxNotes = 8;
  if (r.failures.size() < kMaxNotes) r.failures.push_back(std::move(msg));
}

}  // namespace

BijectionReport verify_bijection(const Graph& g, const VertexOrdering& ord, HatRule rule) {
  BijectionReport report;
  const int n = g.order();
  const std::vector<CliqueCover> covers = enumerate_clique_covers(g);
  report.covers = covers.size();

  if (g.edge_count() == 0) {
    // The hat graph is empty: its only independent set is the empty set.
    report.independent_sets = 1;
    const IndependentSet image = phi_forward(g, covers.front(), ord);
    report.sizes_shift = covers.size() == 1 && image.members.empty();
    report.counts_match = report.sizes_shift;
    if (!report.passed()) note(report, "edgeless graph must have exactly the singleton cover");
    return report;
  }

  const HatGraph hat = hat_of(g, ord, rule);
  std::vector<BigInt> cover_counts(static_cast<std::size_t>(n) + 1, 0);
  for (const CliqueCover& q0 : covers) {
    const CliqueCover q = CliqueCover::canonical(q0.parts);
    ++cover_counts[q.parts.size()];
    const IndependentSet image = phi_forward(g, q, ord);
    if (image.members.size() != static_cast<std::size_t>(n) - q.parts.size() || !is_independent(hat, image)) {
      report.sizes_shift = false;
      note(report, "phi(" + describe(q) + ") = " + describe(image) + " is not an independent set of size n-|Q|");
      continue;
    }
    try {
      if (phi_inverse(g, hat, image, ord) != q) {
        report.inverse_after_forward = false;
        note(report, "phi^-1(phi(Q)) != Q for Q = " + describe(q));
      }
    } catch (const std::invalid_argument& e) {
      report.inverse_after_forward = false;
      note(report, std::string("phi^-1 rejected phi(Q): ") + e.what());
    }
  }

  const std::vector<IndependentSet> sets = enumerate_independent_sets(hat);
  report.independent_sets = sets.size();
  std::vector<BigInt> set_counts(static_cast<std::size_t>(n) + 1, 0);
  for (const IndependentSet& s : sets) {
    if (s.members.size() <= static_cast<std::size_t>(n)) ++set_counts[s.members.size()];
    try {
      const CliqueCover q = phi_inverse(g, hat, s, ord);
      if (phi_forward(g, q, ord) != s) {
        report.forward_after_inverse = false;
        note(report, "phi(phi^-1(I)) != I for I = " + describe(s));
      }
    } catch (const std::invalid_argument& e) {
      report.forward_after_inverse = false;
      note(report, "phi^-1(" + describe(s) + ") failed: " + e.what());
    }
  }

  for (int k = 0; k <= n; ++k) {
    if (cover_counts[n - k] != set_counts[k]) {
      report.counts_match = false;
      note(report, "a_(n-" + std::to_string(k) + ") = " + cover_counts[n - k].get_str() + " but i_" +
                       std::to_string(k) + "(hat) = " + set_counts[k].get_str());
    }
  }
  if (sets.size() != covers.size()) report.counts_match = false;
  return report;
}

nlohmann::json to_json(const CliqueCover& q) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : q.parts) {
    nlohmann::json part = nlohmann::json::array();
    for (int v : p) part.push_back(v + 1);
    parts.push_back(part);
  }
  return parts;
}

nlohmann::json to_json(const IndependentSet& s) {
  nlohmann::json members = nlohmann::json::array();
  for (const Edge& e : s.members) members.push_back({e.u + 1, e.v + 1});
  return members;
}

}  // namespace adjointlab
