#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace emax {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if (n % d != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

inline Integer floor(const Rational& x) { return floor_div(numerator_of(x), denominator_of(x)); }
inline Integer ceil(const Rational& x) { return -floor(Rational(-x)); }
inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& x) {
  return is_integer(x) ? numerator_of(x).str() : numerator_of(x).str() + "/" + denominator_of(x).str();
}

/// Truncated (toward -inf) decimal expansion with `digits` fractional digits.
inline std::string to_decimal(const Rational& x, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Integer scaled = floor(Rational(x * scale));
  const bool negative = scaled < 0;
  std::string mag = (negative ? Integer(-scaled) : scaled).str();
  if (digits == 0) return (negative ? "-" : "") + mag;
  if (static_cast<int>(mag.size()) <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
  mag.insert(mag.size() - digits, ".");
  return (negative ? "-" : "") + mag;
}

}  // namespace emax
