#include "adjointlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "adjointlab/errors.hpp"

namespace adjointlab {

namespace {

void require_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v + 1) +
                            " not in 1.." + std::to_string(g.order()));
  }
}

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxVertices));
  }
  adj_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u + 1));
    require_vertex(*this, e.u, "edge");
    require_vertex(*this, e.v, "edge");
    if (has_edge(e.u, e.v)) throw std::invalid_argument("duplicate edge " + to_string(e));
    add_edge(e.u, e.v);
  }
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> edge_bit_index(i, j)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

int Graph::degree(int v) const noexcept { return std::popcount(adj_[v]); }

VertexMask Graph::all_vertices() const noexcept {
  return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::edge_mask() const {
  if (n_ > 11) throw std::invalid_argument("edge mask needs n <= 11");
  std::uint64_t mask = 0;
  for (const Edge& e : edges()) mask |= std::uint64_t{1} << edge_bit_index(e.u, e.v);
  return mask;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  VertexMask seen = 1;
  VertexMask frontier = 1;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
    }
  }
  return Graph(g.order(), es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), es);
}

Relabeled induced_subgraph(const Graph& g, VertexMask keep) {
  if ((keep & ~g.all_vertices()) != 0) throw std::out_of_range("induced_subgraph: vertex set not in V(G)");
  if (keep == 0) throw DegenerateInput("induced_subgraph: empty vertex set");
  std::vector<int> old_to_new(g.order(), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((keep >> v) & 1U) old_to_new[v] = next++;
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (old_to_new[e.u] >= 0 && old_to_new[e.v] >= 0) es.emplace_back(old_to_new[e.u], old_to_new[e.v]);
  }
  return {Graph(next, es), std::move(old_to_new)};
}

Relabeled induced_subgraph(const Graph& g, std::span<const int> keep) {
  VertexMask mask = 0;
  for (int v : keep) {
    require_vertex(g, v, "induced_subgraph");
    mask |= bit(v);
  }
  return induced_subgraph(g, mask);
}

Relabeled delete_vertex(const Graph& g, int v) {
  require_vertex(g, v, "delete_vertex");
  if (g.order() == 1) throw DegenerateInput("delete_vertex: result would be the empty graph");
  return induced_subgraph(g, g.all_vertices() & ~bit(v));
}

Graph delete_edge(const Graph& g, Edge e) {
  require_vertex(g, e.u, "delete_edge");
  require_vertex(g, e.v, "delete_edge");
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("delete_edge: " + to_string(e) + " is not an edge");
  std::vector<Edge> es = g.edges();
  std::erase(es, e);
  return Graph(g.order(), es);
}

Relabeled strip_isolated(const Graph& g) {
  VertexMask keep = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep |= bit(v);
  }
  // An edgeless graph keeps one vertex so the result is never empty.
  if (keep == 0) keep = 1;
  return induced_subgraph(g, keep);
}

VertexOrdering::VertexOrdering(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = size();
  pos_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const int v = perm_[p];
    if (v < 0 || v >= n || pos_[v] != -1) throw std::invalid_argument("ordering is not a permutation of 1..n");
    pos_[v] = p;
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return VertexOrdering(std::move(p));
}

VertexOrdering VertexOrdering::reversed(int n) {
  std::vector<int> p(n);
  std::iota(p.rbegin(), p.rend(), 0);
  return VertexOrdering(std::move(p));
}

VertexOrdering VertexOrdering::shuffled(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t state = seed;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(i + 1));
    std::swap(p[i], p[j]);
  }
  return VertexOrdering(std::move(p));
}

VertexOrdering VertexOrdering::with_edge_last(int n, Edge e) {
  if (e.u == e.v || e.u < 0 || e.v >= n) throw std::invalid_argument("with_edge_last: bad edge");
  std::vector<int> p;
  p.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (v != e.u && v != e.v) p.push_back(v);
  }
  p.push_back(e.u);
  p.push_back(e.v);
  return VertexOrdering(std::move(p));
}

int HatGraph::index_of(const Edge& label) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label);
  return it != labels.end() && *it == label ? static_cast<int>(it - labels.begin()) : -1;
}

namespace {

std::vector<Edge> edge_labels_or_throw(const Graph& g, const char* what) {
  if (g.edge_count() == 0) throw DegenerateInput(std::string(what) + ": graph has no edges");
  if (g.edge_count() > static_cast<std::size_t>(kMaxVertices)) {
    throw CapExceeded(std::string(what) + ": edge count", static_cast<int>(g.edge_count()), kMaxVertices);
  }
  return g.edges();
}

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (auto [a, b] : pairs) es.emplace_back(a, b);
  return Graph(n, es);
}

}  // namespace

HatGraph line_graph(const Graph& g) {
  std::vector<Edge> labels = edge_labels_or_throw(g, "line_graph");
  const int m = static_cast<int>(labels.size());
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Edge& x = labels[a];
      const Edge& y = labels[b];
      if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) pairs.emplace_back(a, b);
    }
  }
  return {graph_from_pairs(m, pairs), std::move(labels)};
}

HatGraph hat_of(const Graph& g, const VertexOrdering& ord, HatRule rule) {
  if (ord.size() != g.order()) throw std::invalid_argument("hat_of: ordering size differs from n");
  std::vector<Edge> labels = edge_labels_or_throw(g, "hat_of");
  const int m = static_cast<int>(labels.size());

  // Positional form (i, j), i < j, of each label.
  std::vector<std::pair<int, int>> positional(m);
  for (int a = 0; a < m; ++a) {
    const int pu = ord.position_of(labels[a].u);
    const int pv = ord.position_of(labels[a].v);
    positional[a] = {std::min(pu, pv), std::max(pu, pv)};
  }

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      auto [i, j] = positional[a];
      auto [k, l] = positional[b];
      if (j > l) {
        std::swap(i, k);
        std::swap(j, l);
      }
      bool adjacent = i == k || j == k;
      if (!adjacent && j == l) {
        adjacent = rule == HatRule::sabotaged || !g.has_edge(ord.vertex_at(i), ord.vertex_at(k));
      }
      if (adjacent) pairs.emplace_back(a, b);
    }
  }
  return {graph_from_pairs(m, pairs), std::move(labels)};
}

bool is_labeled_subgraph(const HatGraph& sub, const HatGraph& super) {
  std::vector<int> map(sub.labels.size());
  for (std::size_t a = 0; a < sub.labels.size(); ++a) {
    map[a] = super.index_of(sub.labels[a]);
    if (map[a] < 0) return false;
  }
  for (const Edge& e : sub.graph.edges()) {
    if (!super.graph.has_edge(map[e.u], map[e.v])) return false;
  }
  return true;
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > 7) throw std::out_of_range("labeled enumeration supports 1 <= n <= 7");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const Graph&)>& visit) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = Graph::from_edge_mask(n, mask);
    if (connected_only && !is_connected(g)) continue;
    visit(g);
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double draw = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
      if (draw < p) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
}

}  // namespace adjointlab
