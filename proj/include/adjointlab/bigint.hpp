#pragma once

#include <gmpxx.h>

#include <string>

namespace adjointlab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Exact decimal rendering of a rational as "p/q" (or "p" when integral).
inline std::string to_fraction(Rational v) {
  v.canonicalize();
  return v.get_den() == 1 ? v.get_num().get_str(10) : v.get_str(10);
}

// Parses "1e-12", "0.001", "3/7", "5" into an exact rational.
Rational parse_rational(const std::string& text);

// Fixed-point decimal string with `digits` fractional digits, truncated
// toward negative infinity.
std::string to_fixed(const Rational& v, int digits);

}  // namespace adjointlab
