#include "adjointlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace adjointlab {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly to_q(const Polynomial& p) {
  QPoly out;
  out.reserve(p.coefficients().size());
  for (const BigInt& c : p.coefficients()) out.emplace_back(c);
  return out;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

void make_monic(QPoly& p) {
  if (p.empty()) return;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

// a = q * b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly q;
  if (degree(a) >= degree(b)) q.assign(static_cast<std::size_t>(degree(a) - degree(b)) + 1, 0);
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (int k = 0; k <= degree(b); ++k) a[k + shift] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

QPoly monic_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

QPoly subtract(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

// Multiply by a positive rational so the coefficients become coprime
// integers; signs are preserved.
Polynomial positive_integer_scale(const QPoly& p) {
  BigInt lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (content > 1) {
    for (auto& v : ints) v /= content;
  }
  return Polynomial(std::move(ints));
}

}  // namespace

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  Polynomial scaled = positive_integer_scale(to_q(p));
  if (scaled.coefficients().back() < 0) scaled = scaled * BigInt(-1);
  return scaled;
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  return primitive_part(positive_integer_scale(monic_gcd(to_q(a), to_q(b))));
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<Polynomial, int>> out;
  QPoly f = to_q(p);
  if (degree(f) < 1) return out;
  const QPoly df = derivative(f);
  const QPoly a0 = monic_gcd(f, df);
  QPoly b = exact_quotient(f, a0);
  QPoly c = exact_quotient(df, a0);
  QPoly d = subtract(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    const QPoly a = monic_gcd(b, d);
    if (degree(a) > 0) out.emplace_back(primitive_part(positive_integer_scale(a)), i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = subtract(c, derivative(b));
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  const QPoly f = to_q(p);
  if (degree(f) < 1) return Polynomial{1};
  return primitive_part(positive_integer_scale(exact_quotient(f, monic_gcd(f, derivative(f)))));
}

int sign_at(const Polynomial& p, const Rational& x) {
  const auto& c = p.coefficients();
  if (c.empty()) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  // b^d p(a/b) by homogenized Horner; b > 0 so the sign is unchanged.
  BigInt acc = c.back();
  BigInt bpow = 1;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    bpow *= b;
    acc = acc * a + c[k] * bpow;
  }
  return sgn(acc);
}

SturmChain::SturmChain(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  QPoly prev = to_q(squarefree);
  QPoly cur = derivative(prev);
  chain_.push_back(positive_integer_scale(prev));
  while (!cur.empty()) {
    chain_.push_back(positive_integer_scale(cur));
    QPoly rem = divmod(prev, cur).second;
    for (auto& r : rem) r = -r;
    prev = std::move(cur);
    cur = std::move(rem);
  }
}

int SturmChain::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const Polynomial& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

Rational root_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  const BigInt lead = abs(p.coefficients().back());
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p[k]), lead));
  const Rational cauchy = m + 1;
  Rational bound = 1;
  while (bound < cauchy) bound *= 2;
  return bound * 2;
}

namespace {

struct Interval {
  Rational lo;
  Rational hi;
};

RealRoot refine(const Polynomial& q, Interval iv, const Rational& tol) {
  if (sign_at(q, iv.hi) == 0) return {iv.hi, iv.hi, 1};
  const int hi_sign = sign_at(q, iv.hi);
  // The root is strictly inside (lo, hi); also move lo off any neighbouring
  // root sitting exactly at the endpoint.
  while (iv.hi - iv.lo > tol || sign_at(q, iv.lo) == 0) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign_at(q, mid);
    if (s == 0) return {mid, mid, 1};
    if (s == hi_sign) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return {iv.lo, iv.hi, 1};
}

}  // namespace

std::vector<RealRoot> isolate_real_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi,
                                            const Rational& tol) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (tol <= 0) throw std::invalid_argument("isolate_real_roots: tolerance must be positive");
  std::vector<RealRoot> out;
  if (p.degree() < 1 || !(lo < hi)) return out;

  const auto factors = squarefree_decomposition(p);
  const Polynomial q = squarefree_part(p);
  const SturmChain chain(q);

  std::vector<Interval> isolated;
  std::vector<std::pair<Interval, int>> pending{{{lo, hi}, chain.count(lo, hi)}};
  while (!pending.empty()) {
    auto [iv, count] = pending.back();
    pending.pop_back();
    if (count == 0) continue;
    if (count == 1) {
      isolated.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int left = chain.count(iv.lo, mid);
    pending.push_back({{mid, iv.hi}, count - left});
    pending.push_back({{iv.lo, mid}, left});
  }

  std::vector<SturmChain> factor_chains;
  factor_chains.reserve(factors.size());
  for (const auto& [f, mult] : factors) factor_chains.emplace_back(f);

  for (const Interval& iv : isolated) {
    RealRoot root = refine(q, iv, tol);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const bool here = root.exact() ? sign_at(factors[i].first, root.lo) == 0
                                     : factor_chains[i].count(root.lo, root.hi) == 1;
      if (here) {
        root.multiplicity = factors[i].second;
        break;
      }
    }
    out.push_back(std::move(root));
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

std::vector<RealRoot> isolate_real_roots(const Polynomial& p, const Rational& tol) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  const Rational bound = root_bound(p);
  return isolate_real_roots_in(p, Rational(-bound), bound, tol);
}

int real_root_count_with_multiplicity(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count_with_multiplicity: zero polynomial");
  int total = 0;
  const Rational bound = root_bound(p);
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    total += mult * SturmChain(f).count(Rational(-bound), bound);
  }
  return total;
}

namespace {

using Quad = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<106, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

template <class T>
struct Cx {
  T re{};
  T im{};

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  T norm() const { return re * re + im * im; }
};

template <class T>
T modulus(const Cx<T>& z) {
  using std::sqrt;
  return sqrt(z.norm());
}

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.get_d();
  } else {
    return T(r.get_num().get_str()) / T(r.get_den().get_str());
  }
}

template <class T>
T epsilon() {
  return std::numeric_limits<T>::epsilon();
}

// p(z) and p'(z) by Horner.
template <class T>
std::pair<Cx<T>, Cx<T>> horner(const std::vector<T>& c, const Cx<T>& z) {
  Cx<T> p{c.back(), T(0)};
  Cx<T> dp{T(0), T(0)};
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + Cx<T>{c[k], T(0)};
  }
  return {p, dp};
}

template <class T>
T relative_residual(const std::vector<T>& c, const Cx<T>& z) {
  using std::abs;
  const T r = modulus(z);
  T scale = 0;
  T power = 1;
  for (const T& ck : c) {
    scale += abs(ck) * power;
    power *= r;
  }
  const T value = modulus(horner(c, z).first);
  return scale == 0 ? T(0) : value / scale;
}

template <class T>
struct FactorRoots {
  std::vector<Cx<T>> roots;
  bool converged = false;
  T residual = 0;
};

// Aberth-Ehrlich on a square-free polynomial with nonzero constant term.
template <class T>
FactorRoots<T> aberth(const Polynomial& f, int max_iterations) {
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  const int d = f.degree();
  std::vector<T> c;
  c.reserve(f.coefficients().size());
  for (const BigInt& v : f.coefficients()) c.push_back(from_rational<T>(Rational(v)));

  FactorRoots<T> out;
  if (d == 1) {
    out.roots.push_back({from_rational<T>(Rational(-f[0], f[1])), T(0)});
    out.converged = true;
    out.residual = relative_residual(c, out.roots.front());
    return out;
  }

  T radius = 0;
  for (int k = 1; k <= d; ++k) {
    const T ratio = abs(c[d - k] / c[d]);
    if (ratio > 0) radius = std::max(radius, T(pow(ratio, T(1) / T(k))));
  }
  if (radius == 0) radius = 1;
  const T two_pi = T(2) * boost::math::constants::pi<T>();
  std::vector<Cx<T>> z(d);
  for (int k = 0; k < d; ++k) {
    const T angle = two_pi * T(k) / T(d) + T(0.4);
    z[k] = {radius * cos(angle), radius * sin(angle)};
  }

  const T stop = epsilon<T>() * T(64);
  int quiet_rounds = 0;
  for (int iter = 0; iter < max_iterations && quiet_rounds < 2; ++iter) {
    T worst = 0;
    for (int k = 0; k < d; ++k) {
      const auto [p, dp] = horner(c, z[k]);
      if (p.norm() == 0) continue;
      Cx<T> sum{T(0), T(0)};
      for (int j = 0; j < d; ++j) {
        if (j != k) sum = sum + Cx<T>{T(1), T(0)} / (z[k] - z[j]);
      }
      const Cx<T> ratio = dp.norm() == 0 ? Cx<T>{epsilon<T>(), epsilon<T>()} : p / dp;
      const Cx<T> w = ratio / (Cx<T>{T(1), T(0)} - ratio * sum);
      z[k] = z[k] - w;
      worst = std::max(worst, T(modulus(w) / std::max(T(1), modulus(z[k]))));
    }
    quiet_rounds = worst <= stop ? quiet_rounds + 1 : 0;
  }
  out.converged = quiet_rounds >= 2;
  for (const auto& r : z) out.residual = std::max(out.residual, relative_residual(c, r));
  out.roots = std::move(z);
  return out;
}

template <class T>
ComplexRootResult solve_all(const Polynomial& p, double tol, int bits, int max_iterations) {
  ComplexRootResult result;
  result.precision_bits = bits;
  result.converged = true;
  int zeros = 0;
  while (p[zeros] == 0) ++zeros;
  result.roots.assign(static_cast<std::size_t>(zeros), {0.0, 0.0});
  std::vector<BigInt> shifted(p.coefficients().begin() + zeros, p.coefficients().end());
  const Polynomial rest(std::move(shifted));
  if (rest.degree() < 1) return result;

  for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
    FactorRoots<T> fr = aberth<T>(factor, max_iterations);
    const double residual = static_cast<double>(fr.residual);
    result.max_relative_residual = std::max(result.max_relative_residual, residual);
    if (!fr.converged || residual > tol) result.converged = false;
    for (const auto& z : fr.roots) {
      for (int m = 0; m < mult; ++m) result.roots.emplace_back(static_cast<double>(z.re), static_cast<double>(z.im));
    }
  }
  return result;
}

}  // namespace

ComplexRootResult complex_roots_at(const Polynomial& p, double tol, int precision_bits) {
  if (p.degree() < 1) throw std::invalid_argument("complex_roots: degree must be at least 1");
  if (precision_bits <= 53) return solve_all<double>(p, tol, 53, 500);
  return solve_all<Quad>(p, tol, 106, 1000);
}

ComplexRootResult complex_roots(const Polynomial& p, double tol) {
  ComplexRootResult first = complex_roots_at(p, tol, 53);
  if (first.converged) return first;
  return complex_roots_at(p, tol, 106);
}

}  // namespace adjointlab
