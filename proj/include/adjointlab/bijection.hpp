#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjointlab/graph.hpp"
#include "adjointlab/spectra.hpp"

namespace adjointlab {

// A partition of V(G) into cliques. Canonical form: each part sorted, parts
// ordered by their smallest vertex.
struct CliqueCover {
  std::vector<std::vector<int>> parts;

  static CliqueCover canonical(std::vector<std::vector<int>> parts);
  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

// A set of hat-graph vertices, named by their source-edge labels, sorted.
struct IndependentSet {
  std::vector<Edge> members;

  static IndependentSet canonical(std::vector<Edge> members);
  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
};

// Throws std::invalid_argument unless `q` partitions V(g) into cliques.
void validate_cover(const Graph& g, const CliqueCover& q);

// Each part S contributes the pairs (u_j, u_f) where u_f is the vertex of S
// with the largest ordering position and u_j ranges over the rest of S.
IndependentSet phi_forward(const Graph& g, const CliqueCover& q, const VertexOrdering& ord);

// Groups the members by the endpoint with the larger ordering position; each
// nonempty group together with that endpoint is a part, every other vertex
// a singleton. Throws std::invalid_argument when `iset` is not independent
// in `hat` or names a label that is not a hat vertex.
CliqueCover phi_inverse(const Graph& g, const HatGraph& hat, const IndependentSet& iset,
                        const VertexOrdering& ord);

bool is_independent(const HatGraph& hat, const IndependentSet& iset);

inline constexpr int kCoverEnumerationCap = 8;
inline constexpr int kIndependentSetEnumerationCap = 20;

// Brute-force oracles, independent of the counting algorithms in spectra.
// Covers come from restricted-growth strings filtered for cliques, in
// lexicographic order of the string.
void for_each_clique_cover(const Graph& g, const std::function<void(const CliqueCover&)>& visit,
                           int cap = kCoverEnumerationCap);
std::vector<CliqueCover> enumerate_clique_covers(const Graph& g, int cap = kCoverEnumerationCap);

// Every vertex subset of `g` checked for independence, in mask order.
void for_each_independent_set(const Graph& g, const std::function<void(VertexMask)>& visit,
                              int cap = kIndependentSetEnumerationCap);
// Independent sets of a hat graph, as label sets.
std::vector<IndependentSet> enumerate_independent_sets(const HatGraph& hat,
                                                       int cap = kIndependentSetEnumerationCap);

CoverSpectrum naive_cover_spectrum(const Graph& g, int cap = kCoverEnumerationCap);
IndependenceSpectrum naive_independence_spectrum(const Graph& g, int cap = kIndependentSetEnumerationCap);
// Recursive include/exclude over the edge list.
MatchingSpectrum naive_matching_spectrum(const Graph& g);

struct BijectionReport {
  bool sizes_shift = true;         // |phi(Q)| = n - |Q| and phi(Q) is independent
  bool inverse_after_forward = true;
  bool forward_after_inverse = true;
  bool counts_match = true;        // a_(n-k)(G) = i_k(hat) for all k
  std::size_t covers = 0;
  std::size_t independent_sets = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept {
    return sizes_shift && inverse_after_forward && forward_after_inverse && counts_match;
  }
};

BijectionReport verify_bijection(const Graph& g, const VertexOrdering& ord,
                                 HatRule rule = HatRule::standard);

nlohmann::json to_json(const CliqueCover& q);
nlohmann::json to_json(const IndependentSet& s);

}  // namespace adjointlab
