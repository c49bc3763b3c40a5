#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "adjointlab/graph.hpp"
#include "adjointlab/graph_io.hpp"
#include "adjointlab/polynomial.hpp"

namespace testing {

using adjointlab::Edge;
using adjointlab::Graph;

// 1-based edge pairs, as in the text formats.
inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.emplace_back(a - 1, b - 1);
  return Graph(n, es);
}

inline Graph example5() { return make(5, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}); }

inline Graph complete(int n) {
  Graph g(n);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

inline Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

// Test-side generator, kept apart from the library's own RNG.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Graph graph(int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng_)) es.emplace_back(i, j);
    return Graph(n, es);
  }

  Graph graph(int min_n, int max_n) {
    const int n = integer(min_n, max_n);
    return graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng_));
  }

  Graph connected_graph(int min_n, int max_n) {
    for (;;) {
      Graph g = graph(min_n, max_n);
      if (adjointlab::is_connected(g)) return g;
    }
  }

  adjointlab::VertexOrdering ordering(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng_);
    return adjointlab::VertexOrdering(perm);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<std::string> coeff_strings(const adjointlab::Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

}  // namespace testing
