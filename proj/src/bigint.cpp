#include "adjointlab/bigint.hpp"

#include <cctype>
#include <stdexcept>

#include "adjointlab/errors.hpp"

namespace adjointlab {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw ParseError("not a rational: '" + text + "'");
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --exponent;
      any = true;
    }
  }
  if (!any) throw ParseError("not a number: '" + text + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(text.substr(i), &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + text + "'");
    }
    exponent += e;
    i += used;
  }
  if (i != text.size()) throw ParseError("trailing characters in '" + text + "'");
  if (exponent > 4096 || exponent < -4096) throw ParseError("exponent out of range in '" + text + "'");

  BigInt num(digits, 10);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_fixed(const Rational& v, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled;
  const BigInt numer = v.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), numer.get_mpz_t(), v.get_den().get_mpz_t());
  const bool negative = scaled < 0;
  std::string s = BigInt(abs(scaled)).get_str(10);
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace adjointlab
