#pragma once

#include <vector>

#include "adjointlab/bigint.hpp"
#include "adjointlab/graph.hpp"
#include "adjointlab/polynomial.hpp"

namespace adjointlab {

inline constexpr int kCliqueCoverCap = 20;
// The subset table needs 2^n * (n/2 + 1) words; past this it stops fitting
// in memory on a workstation, so caller overrides are clamped here.
inline constexpr int kCliqueCoverHardCap = 24;
inline constexpr int kIndependenceCap = 40;
inline constexpr int kMatchingCap = 40;
inline constexpr int kChromaticCap = 12;

// counts[k] = a_k(G), the number of partitions of V(G) into exactly k
// cliques, for k = 0..n (counts[0] is always 0).
struct CoverSpectrum {
  std::vector<BigInt> counts;

  int order() const noexcept { return static_cast<int>(counts.size()) - 1; }
  BigInt operator[](int k) const;
  friend bool operator==(const CoverSpectrum&, const CoverSpectrum&) = default;
};

// counts[k] = i_k(H), independent sets of size k, for k = 0..alpha(H).
struct IndependenceSpectrum {
  std::vector<BigInt> counts;

  BigInt operator[](int k) const;
  friend bool operator==(const IndependenceSpectrum&, const IndependenceSpectrum&) = default;
};

// counts[k] = m_k(G), matchings with k edges, for k = 0..nu(G).
struct MatchingSpectrum {
  std::vector<BigInt> counts;

  BigInt operator[](int k) const;
  friend bool operator==(const MatchingSpectrum&, const MatchingSpectrum&) = default;
};

// Subset dynamic programme: for a vertex set S, the lowest vertex of S lies
// in exactly one part, so f(S) = sum over cliques C of G[S] containing it of
// y * f(S \ C). `cap` is clamped to kCliqueCoverHardCap.
CoverSpectrum clique_cover_spectrum(const Graph& g, int cap = kCliqueCoverCap);

// Branches on a maximum-degree vertex v: I(S) = I(S - v) + x I(S - N[v]),
// splitting into connected components and memoizing on vertex masks.
IndependenceSpectrum independence_spectrum(const Graph& g, int cap = kIndependenceCap);

// Branches on a minimum positive-degree vertex v: either v is unmatched or
// it is matched to one of its neighbours.
MatchingSpectrum matching_spectrum(const Graph& g, int cap = kMatchingCap);

// h(G,x) = sum_k (-1)^(n-k) a_k x^k.
Polynomial adjoint_polynomial(const CoverSpectrum& a);
Polynomial adjoint_polynomial(const Graph& g, int cap = kCliqueCoverCap);
// h*(G,x) = x^n h(G,1/x) = sum_k (-1)^k a_(n-k) x^k.
Polynomial h_star(const CoverSpectrum& a);
Polynomial h_star(const Graph& g, int cap = kCliqueCoverCap);
// I(H,x) = sum_k (-1)^k i_k x^k.
Polynomial independence_polynomial(const IndependenceSpectrum& i);
Polynomial independence_polynomial(const Graph& g, int cap = kIndependenceCap);
// M(G,x) = sum_k (-1)^k m_k x^(n-k). The exponent is n-k, not the
// classical n-2k, so that M(G,x) = x^n I(L(G),1/x).
Polynomial matching_polynomial_modified(const MatchingSpectrum& m, int n);
Polynomial matching_polynomial_modified(const Graph& g, int cap = kMatchingCap);

// Deletion-contraction (addition-contraction on dense graphs) with
// component splitting and memoization on the relabeled adjacency.
Polynomial chromatic_polynomial(const Graph& g, int cap = kChromaticCap);

// sum_k a_k(G) x(x-1)...(x-k+1).
Polynomial falling_factorial_expansion(const CoverSpectrum& a);

// Whether the falling-factorial expansion of the cover spectrum equals the
// chromatic polynomial of the complement.
bool chromatic_cross_check(const Graph& g, int cap = kChromaticCap);

}  // namespace adjointlab
