#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "adjointlab/bigint.hpp"
#include "adjointlab/polynomial.hpp"

namespace adjointlab {

// One distinct real root, certified to lie in [lo, hi]. When lo == hi the
// root is that (dyadic) rational exactly; otherwise it lies strictly inside.
struct RealRoot {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
};

// Primitive integer polynomial with positive leading coefficient; the
// content and sign are discarded.
Polynomial primitive_part(const Polynomial& p);

// Exact gcd over Q, returned as a primitive integer polynomial.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

// Yun decomposition p = c * prod_i f_i^i with pairwise coprime square-free
// primitive factors. Factors equal to 1 are omitted.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);

// Sturm chain of a square-free polynomial, each member scaled by a positive
// rational to a primitive integer polynomial (scaling keeps sign patterns).
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& squarefree);

  // Sign variations at x, zeros skipped.
  int variations(const Rational& x) const;
  // Distinct roots in the half-open interval (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

// Sign of p(x) computed with integer arithmetic only.
int sign_at(const Polynomial& p, const Rational& x);

// Power of two strictly greater than the modulus of every complex root.
Rational root_bound(const Polynomial& p);

// All distinct real roots of p in increasing order, each refined to width
// <= tol, with exact multiplicities. Throws std::invalid_argument for the
// zero polynomial.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p, const Rational& tol);
// Same, restricted to the half-open interval (lo, hi].
std::vector<RealRoot> isolate_real_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi,
                                            const Rational& tol);

// Number of real roots counted with multiplicity.
int real_root_count_with_multiplicity(const Polynomial& p);

struct ComplexRootResult {
  // Degree-many approximations, repeated by multiplicity.
  std::vector<std::complex<double>> roots;
  bool converged = false;
  // 53 for the first pass, 106 after one escalation.
  int precision_bits = 53;
  // max |p(z)| / sum |c_i| |z|^i over the returned roots
  double max_relative_residual = 0.0;
};

// Aberth-Ehrlich iteration run on each square-free factor separately, so
// every iteration targets simple roots; exact zero roots and linear factors
// are placed directly. Starting points sit on a circle of radius derived
// from the coefficients, so results are deterministic. Accepts when every
// root satisfies |p(z)| <= tol * sum |c_i| |z|^i; otherwise retries once at
// 106-bit precision and reports converged = false if that also fails.
ComplexRootResult complex_roots(const Polynomial& p, double tol = 1e-12);
// Single pass at a fixed precision (53 or 106 bits).
ComplexRootResult complex_roots_at(const Polynomial& p, double tol, int precision_bits);

}  // namespace adjointlab
