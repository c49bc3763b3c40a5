#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjointlab/bigint.hpp"

namespace adjointlab {

// Dense polynomial in x with exact integer coefficients; index = power.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial monomial(const BigInt& c, int power);
  // x(x-1)...(x-k+1); the empty product for k = 0.
  static Polynomial falling_factorial(int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  // Coefficient of x^k, zero outside the stored range.
  BigInt operator[](int k) const;

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form, e.g. "x^3 - 3*x^2 + x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// {"var":"x","coeffs":["c0","c1",...]} with decimal-string integers.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace adjointlab
