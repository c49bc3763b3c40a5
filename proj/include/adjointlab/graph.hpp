#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace adjointlab {

// graph6's single-byte size header caps n at 62.
inline constexpr int kMaxVertices = 62;

using VertexMask = std::uint64_t;

// Undirected edge between 0-based vertices, normalized so u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// "(i,j)" with 1-based vertex numbers.
std::string to_string(const Edge& e);

// Simple undirected graph on vertices 0..n-1 (1..n at every text boundary).
// Adjacency is stored as one bitmask per vertex.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  // Bit b of `mask` selects the b-th vertex pair in graph6 column order,
  // pairs (0,1),(0,2),(1,2),(0,3),...; see edge_bit_index.
  static Graph from_edge_mask(int n, std::uint64_t mask);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept;
  VertexMask all_vertices() const noexcept;

  // Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  // Inverse of from_edge_mask; requires n <= 11.
  std::uint64_t edge_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edge(int u, int v);

  int n_;
  std::size_t m_ = 0;
  std::vector<VertexMask> adj_;
};

// Index of pair (i, j), i < j, in graph6 column order.
constexpr int edge_bit_index(int i, int j) { return j * (j - 1) / 2 + i; }

int max_degree(const Graph& g);
bool is_connected(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Result of an operation that drops vertices: the remaining vertices are
// relabeled compactly, preserving relative order. old_to_new[v] is -1 for
// removed vertices.
struct Relabeled {
  Graph graph;
  std::vector<int> old_to_new;
};

Relabeled delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, Edge e);
Relabeled induced_subgraph(const Graph& g, VertexMask keep);
Relabeled induced_subgraph(const Graph& g, std::span<const int> keep);
Relabeled strip_isolated(const Graph& g);

// A labeling u_1..u_n of the vertices: position -> vertex.
class VertexOrdering {
 public:
  explicit VertexOrdering(std::vector<int> perm);

  static VertexOrdering identity(int n);
  static VertexOrdering reversed(int n);
  // Fisher-Yates driven by a splitmix64 stream, so the result depends only
  // on (n, seed).
  static VertexOrdering shuffled(int n, std::uint64_t seed);
  // Identity ordering with the endpoints of e moved to the last two
  // positions (u then v).
  static VertexOrdering with_edge_last(int n, Edge e);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  int vertex_at(int position) const noexcept { return perm_[position]; }
  int position_of(int vertex) const noexcept { return pos_[vertex]; }
  const std::vector<int>& permutation() const noexcept { return perm_; }

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.perm_ == b.perm_;
  }

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

// A graph whose vertices stand for edges of a source graph. labels[k] is the
// source edge (in source vertex numbers) carried by vertex k.
struct HatGraph {
  Graph graph;
  std::vector<Edge> labels;

  // -1 when `label` is not a vertex of this graph.
  int index_of(const Edge& label) const;
};

HatGraph line_graph(const Graph& g);

enum class HatRule {
  standard,
  // Drops the non-adjacency condition when the two pairs share their larger
  // endpoint, which degenerates into the line graph. Negative control only.
  sabotaged,
};

// Hat vertices are the edges (u_i, u_j), i < j in ordering positions. Two of
// them, oriented so j <= l, are adjacent iff i == k, j == k, or j == l with
// u_i u_k not an edge of g.
HatGraph hat_of(const Graph& g, const VertexOrdering& ord, HatRule rule = HatRule::standard);

// Every label of `sub` is a label of `super` and every edge of `sub`,
// read through the labels, is an edge of `super`.
bool is_labeled_subgraph(const HatGraph& sub, const HatGraph& super);

// Calls `visit` for every labeled graph on n vertices (1 <= n <= 7), in
// increasing edge-mask order.
void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<void(const Graph&)>& visit);
std::uint64_t labeled_graph_count(int n);

// G(n, p) with a splitmix64 stream; an edge is kept when the next draw,
// scaled to [0,1), is below p.
Graph random_graph(int n, double p, std::uint64_t seed);

// splitmix64 step; exposed so orderings and sweeps share one generator.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace adjointlab
