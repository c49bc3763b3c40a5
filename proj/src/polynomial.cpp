#include "adjointlab/polynomial.hpp"

#include <sstream>

#include "adjointlab/errors.hpp"

namespace adjointlab {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(const BigInt& c, int power) {
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::falling_factorial(int k) {
  Polynomial p{1};
  for (int j = 0; j < k; ++j) p = p * Polynomial{-j, 1};
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::operator[](int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : BigInt(0);
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const BigInt& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) out << mag.get_str();
    if (k > 0) {
      if (!unit) out << '*';
      out << 'x';
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(c.get_str(10));
  if (p.is_zero()) coeffs.push_back("0");
  return {{"var", "x"}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("bad polynomial coefficient");
    coeffs.push_back(v);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace adjointlab
