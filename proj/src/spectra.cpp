#include "adjointlab/spectra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "adjointlab/errors.hpp"

namespace adjointlab {

namespace {

using Counts = std::vector<BigInt>;

BigInt at_or_zero(const Counts& c, int k) {
  return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : BigInt(0);
}

void trim(Counts& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// a + x^shift * b
Counts add_shifted(Counts a, const Counts& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += b[k];
  trim(a);
  return a;
}

Counts multiply(const Counts& a, const Counts& b) {
  Counts out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Counts binomial_row(int k) {
  Counts row(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) mpz_bin_uiui(row[j].get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
  return row;
}

// Connected component of the lowest vertex of `set` inside the induced
// subgraph on `set`.
VertexMask component_of_lowest(const Graph& g, VertexMask set) {
  VertexMask seen = set & (~set + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= set;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) throw CapExceeded(what, g.order(), cap);
}

class IndependenceCounter {
 public:
  explicit IndependenceCounter(const Graph& g) : g_(g) {}

  Counts count(VertexMask set) {
    if (set == 0) return {BigInt(1)};
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;

    Counts result;
    const VertexMask comp = component_of_lowest(g_, set);
    if (comp != set) {
      result = multiply(count(comp), count(set & ~comp));
    } else {
      int best = -1;
      int best_degree = -1;
      for (VertexMask s = set; s != 0; s &= s - 1) {
        const int v = std::countr_zero(s);
        const int d = std::popcount(g_.neighbors(v) & set);
        if (d > best_degree) {
          best = v;
          best_degree = d;
        }
      }
      if (best_degree == 0) {
        result = binomial_row(std::popcount(set));
      } else {
        const VertexMask v = VertexMask{1} << best;
        result = add_shifted(count(set & ~v), count(set & ~(v | g_.neighbors(best))), 1);
      }
    }
    memo_.emplace(set, result);
    return result;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexMask, Counts> memo_;
};

class MatchingCounter {
 public:
  explicit MatchingCounter(const Graph& g) : g_(g) {}

  Counts count(VertexMask set) {
    // Drop vertices with no neighbours inside the set; they never match.
    VertexMask live = 0;
    for (VertexMask s = set; s != 0; s &= s - 1) {
      const int v = std::countr_zero(s);
      if ((g_.neighbors(v) & set) != 0) live |= VertexMask{1} << v;
    }
    set = live;
    if (set == 0) return {BigInt(1)};
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;

    Counts result;
    const VertexMask comp = component_of_lowest(g_, set);
    if (comp != set) {
      result = multiply(count(comp), count(set & ~comp));
    } else {
      int pick = -1;
      int pick_degree = 64;
      for (VertexMask s = set; s != 0; s &= s - 1) {
        const int v = std::countr_zero(s);
        const int d = std::popcount(g_.neighbors(v) & set);
        if (d < pick_degree) {
          pick = v;
          pick_degree = d;
        }
      }
      const VertexMask v = VertexMask{1} << pick;
      result = count(set & ~v);
      for (VertexMask nb = g_.neighbors(pick) & set; nb != 0; nb &= nb - 1) {
        const VertexMask u = nb & (~nb + 1);
        result = add_shifted(std::move(result), count(set & ~(v | u)), 1);
      }
    }
    memo_.emplace(set, result);
    return result;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexMask, Counts> memo_;
};

// Compact adjacency for the chromatic recursion; n <= 12 fits 16-bit rows.
struct SmallGraph {
  int k = 0;
  std::array<std::uint16_t, 16> adj{};

  int edges() const {
    int twice = 0;
    for (int v = 0; v < k; ++v) twice += std::popcount(adj[v]);
    return twice / 2;
  }
  std::string key() const {
    std::string s(static_cast<std::size_t>(2 * k + 1), '\0');
    s[0] = static_cast<char>(k);
    for (int v = 0; v < k; ++v) {
      s[1 + 2 * v] = static_cast<char>(adj[v] & 0xFF);
      s[2 + 2 * v] = static_cast<char>(adj[v] >> 8);
    }
    return s;
  }
};

SmallGraph restrict_to(const SmallGraph& g, std::uint32_t keep) {
  std::array<int, 16> map{};
  SmallGraph out;
  for (int v = 0; v < g.k; ++v) map[v] = (keep >> v) & 1U ? out.k++ : -1;
  for (int v = 0; v < g.k; ++v) {
    if (map[v] < 0) continue;
    for (int w = 0; w < g.k; ++w) {
      if (map[w] >= 0 && ((g.adj[v] >> w) & 1U)) out.adj[map[v]] |= static_cast<std::uint16_t>(1U << map[w]);
    }
  }
  return out;
}

// Merge v into u; u < v.
SmallGraph contract(const SmallGraph& g, int u, int v) {
  SmallGraph merged = g;
  merged.adj[u] = static_cast<std::uint16_t>((g.adj[u] | g.adj[v]) & ~(1U << u) & ~(1U << v));
  for (int w = 0; w < g.k; ++w) {
    if (w != u && ((g.adj[v] >> w) & 1U)) merged.adj[w] = static_cast<std::uint16_t>(merged.adj[w] | (1U << u));
  }
  const std::uint32_t all = (1U << g.k) - 1;
  return restrict_to(merged, all & ~(1U << v));
}

class ChromaticSolver {
 public:
  Polynomial solve(const SmallGraph& g) {
    const int m = g.edges();
    if (m == 0) return Polynomial::monomial(1, g.k);
    if (m == g.k * (g.k - 1) / 2) return Polynomial::falling_factorial(g.k);

    const std::uint32_t all = (1U << g.k) - 1;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= g.adj[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != all) return solve(restrict_to(g, seen)) * solve(restrict_to(g, all & ~seen));

    const std::string key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Polynomial result;
    if (2 * m > g.k * (g.k - 1) / 2) {
      // Dense: P(G) = P(G + uv) + P(G / uv) for a non-edge uv.
      for (int u = 0; u < g.k && result.is_zero(); ++u) {
        const std::uint32_t missing = all & ~g.adj[u] & ~(1U << u) & ~((1U << (u + 1)) - 1);
        if (missing == 0) continue;
        const int v = std::countr_zero(missing);
        SmallGraph plus = g;
        plus.adj[u] = static_cast<std::uint16_t>(plus.adj[u] | (1U << v));
        plus.adj[v] = static_cast<std::uint16_t>(plus.adj[v] | (1U << u));
        result = solve(plus) + solve(contract(g, u, v));
      }
    } else {
      // Sparse: P(G) = P(G - uv) - P(G / uv), on an edge at a max-degree vertex.
      int u = 0;
      for (int w = 1; w < g.k; ++w) {
        if (std::popcount(g.adj[w]) > std::popcount(g.adj[u])) u = w;
      }
      const int v = std::countr_zero(static_cast<std::uint32_t>(g.adj[u]));
      SmallGraph minus = g;
      minus.adj[u] = static_cast<std::uint16_t>(minus.adj[u] & ~(1U << v));
      minus.adj[v] = static_cast<std::uint16_t>(minus.adj[v] & ~(1U << u));
      result = solve(minus) - solve(contract(g, std::min(u, v), std::max(u, v)));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::unordered_map<std::string, Polynomial> memo_;
};

}  // namespace

BigInt CoverSpectrum::operator[](int k) const { return at_or_zero(counts, k); }
BigInt IndependenceSpectrum::operator[](int k) const { return at_or_zero(counts, k); }
BigInt MatchingSpectrum::operator[](int k) const { return at_or_zero(counts, k); }

CoverSpectrum clique_cover_spectrum(const Graph& g, int cap) {
  check_cap(g, std::min(cap, kCliqueCoverHardCap), "clique_cover_spectrum");
  const int n = g.order();
  const std::size_t subsets = std::size_t{1} << n;

  // Row for S holds coefficients of y^0..y^|S|.
  std::vector<std::uint64_t> offset(subsets + 1);
  for (std::size_t s = 0; s < subsets; ++s) offset[s + 1] = offset[s] + static_cast<std::uint64_t>(std::popcount(s)) + 1;
  std::vector<std::uint64_t> table(offset[subsets], 0);
  table[0] = 1;

  std::vector<std::pair<VertexMask, VertexMask>> stack;
  for (std::size_t s = 1; s < subsets; ++s) {
    const VertexMask set = s;
    const int v = std::countr_zero(set);
    std::uint64_t* row = &table[offset[s]];
    stack.clear();
    stack.emplace_back(VertexMask{1} << v, set & g.neighbors(v));
    while (!stack.empty()) {
      const auto [clique, candidates] = stack.back();
      stack.pop_back();
      const VertexMask rest = set & ~clique;
      const std::uint64_t* sub = &table[offset[rest]];
      const int width = std::popcount(rest) + 1;
      for (int k = 0; k < width; ++k) {
        if (__builtin_add_overflow(row[k + 1], sub[k], &row[k + 1])) {
          throw CapExceeded("clique_cover_spectrum: 64-bit accumulator overflow", n, kCliqueCoverHardCap);
        }
      }
      for (VertexMask c = candidates; c != 0; c &= c - 1) {
        const int w = std::countr_zero(c);
        const VertexMask above = c & ~((VertexMask{1} << (w + 1)) - 1);
        stack.emplace_back(clique | (VertexMask{1} << w), above & g.neighbors(w));
      }
    }
  }

  CoverSpectrum out;
  out.counts.resize(static_cast<std::size_t>(n) + 1);
  const std::uint64_t* full = &table[offset[subsets - 1]];
  for (int k = 0; k <= n; ++k) mpz_import(out.counts[k].get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &full[k]);
  return out;
}

IndependenceSpectrum independence_spectrum(const Graph& g, int cap) {
  check_cap(g, cap, "independence_spectrum");
  IndependenceCounter counter(g);
  return {counter.count(g.all_vertices())};
}

MatchingSpectrum matching_spectrum(const Graph& g, int cap) {
  check_cap(g, cap, "matching_spectrum");
  MatchingCounter counter(g);
  return {counter.count(g.all_vertices())};
}

Polynomial adjoint_polynomial(const CoverSpectrum& a) {
  const int n = a.order();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) c[k] = (n - k) % 2 == 0 ? a[k] : BigInt(-a[k]);
  return Polynomial(std::move(c));
}

Polynomial adjoint_polynomial(const Graph& g, int cap) { return adjoint_polynomial(clique_cover_spectrum(g, cap)); }

Polynomial h_star(const CoverSpectrum& a) {
  const int n = a.order();
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[k] = k % 2 == 0 ? a[n - k] : BigInt(-a[n - k]);
  return Polynomial(std::move(c));
}

Polynomial h_star(const Graph& g, int cap) { return h_star(clique_cover_spectrum(g, cap)); }

Polynomial independence_polynomial(const IndependenceSpectrum& i) {
  std::vector<BigInt> c(i.counts.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = k % 2 == 0 ? i.counts[k] : BigInt(-i.counts[k]);
  return Polynomial(std::move(c));
}

Polynomial independence_polynomial(const Graph& g, int cap) {
  return independence_polynomial(independence_spectrum(g, cap));
}

Polynomial matching_polynomial_modified(const MatchingSpectrum& m, int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < m.counts.size(); ++k) {
    c[n - static_cast<int>(k)] = k % 2 == 0 ? m.counts[k] : BigInt(-m.counts[k]);
  }
  return Polynomial(std::move(c));
}

Polynomial matching_polynomial_modified(const Graph& g, int cap) {
  return matching_polynomial_modified(matching_spectrum(g, cap), g.order());
}

Polynomial chromatic_polynomial(const Graph& g, int cap) {
  check_cap(g, std::min(cap, 16), "chromatic_polynomial");
  SmallGraph sg;
  sg.k = g.order();
  for (int v = 0; v < g.order(); ++v) sg.adj[v] = static_cast<std::uint16_t>(g.neighbors(v));
  ChromaticSolver solver;
  return solver.solve(sg);
}

Polynomial falling_factorial_expansion(const CoverSpectrum& a) {
  Polynomial sum;
  Polynomial basis{1};
  for (int k = 1; k <= a.order(); ++k) {
    basis = basis * Polynomial{-(k - 1), 1};
    if (a[k] != 0) sum += basis * a[k];
  }
  return sum;
}

bool chromatic_cross_check(const Graph& g, int cap) {
  check_cap(g, cap, "chromatic_cross_check");
  return falling_factorial_expansion(clique_cover_spectrum(g, cap)) == chromatic_polynomial(complement(g), cap);
}

}  // namespace adjointlab
