#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "emax/error.hpp"
#include "emax/rational.hpp"

namespace emax {

/// Working precision for certified comparisons; EMAX_PRECISION_BITS overrides.
inline int default_precision_bits() {
  if (const char* env = std::getenv("EMAX_PRECISION_BITS")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 16 && bits <= 1 << 20) return static_cast<int>(bits);
    throw InputError(std::string("EMAX_PRECISION_BITS must be an integer in [16, 1048576], got '") + env + "'");
  }
  return 256;
}

struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// ln 2 within 2^-bits: with M = bits + 16 guard bits,
/// S = sum_{k=1}^{M} floor(2^(M-k) / k) satisfies S <= 2^M ln 2 <= S + M + 1.
inline Enclosure ln2_enclosure(int bits) {
  static std::mutex mutex;
  static std::map<int, Enclosure> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(bits); it != cache.end()) return it->second;
  const int m = bits + 16;
  Integer sum = 0;
  for (int k = 1; k <= m; ++k) sum += (Integer(1) << (m - k)) / k;
  const Integer denom = Integer(1) << m;
  Enclosure out{Rational(sum, denom), Rational(Integer(sum + m + 1), denom)};
  cache.emplace(bits, out);
  return out;
}

/// Exact value a + b ln 2 with a, b rational.
struct Log2Linear {
  Rational a = 0;
  Rational b = 0;

  Log2Linear() = default;
  Log2Linear(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  Log2Linear(int v) : a(v) {}

  friend Log2Linear operator+(const Log2Linear& x, const Log2Linear& y) { return {x.a + y.a, x.b + y.b}; }
  friend Log2Linear operator-(const Log2Linear& x, const Log2Linear& y) { return {x.a - y.a, x.b - y.b}; }
  friend Log2Linear operator-(const Log2Linear& x) { return {-x.a, -x.b}; }
  friend Log2Linear operator*(const Rational& k, const Log2Linear& x) { return {k * x.a, k * x.b}; }
  friend Log2Linear operator*(const Log2Linear& x, const Rational& k) { return k * x; }
  Log2Linear& operator+=(const Log2Linear& y) { return *this = *this + y; }
  Log2Linear& operator-=(const Log2Linear& y) { return *this = *this - y; }
  friend bool operator==(const Log2Linear&, const Log2Linear&) = default;

  bool is_rational() const { return b == 0; }

  Enclosure enclose(int bits) const {
    const Enclosure l = ln2_enclosure(bits);
    const Rational p = a + b * l.lo, q = a + b * l.hi;
    return p <= q ? Enclosure{p, q} : Enclosure{q, p};
  }
};

namespace detail {

/// Refines the enclosure of x until `decided` accepts it, doubling precision
/// up to 64 times the starting value.
template <class Decide>
auto refine(const Log2Linear& x, int bits, const std::string& what, Decide decided) {
  const int cap = bits * 64;
  for (int p = bits;; p *= 2) {
    if (auto r = decided(x.enclose(p))) return *r;
    if (p >= cap) throw PrecisionError("cannot decide " + what + " within " + std::to_string(cap) + " bits");
  }
}

}  // namespace detail

/// Certified sign of x (-1, 0, 1). Zero only when x is exactly zero.
inline int sign(const Log2Linear& x, int bits = default_precision_bits(), const std::string& what = "sign") {
  if (x.is_rational()) return x.a < 0 ? -1 : (x.a > 0 ? 1 : 0);
  return detail::refine(x, bits, what, [](const Enclosure& e) -> std::optional<int> {
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    return std::nullopt;
  });
}

/// Certified ceiling of x.
inline Integer ceil(const Log2Linear& x, int bits = default_precision_bits(), const std::string& what = "ceiling") {
  if (x.is_rational()) return ceil(x.a);
  return detail::refine(x, bits, what, [](const Enclosure& e) -> std::optional<Integer> {
    const Integer lo = ceil(e.lo), hi = ceil(e.hi);
    if (lo == hi && !is_integer(e.lo)) return lo;
    return std::nullopt;
  });
}

inline bool less_equal(const Log2Linear& x, const Log2Linear& y, int bits = default_precision_bits(),
                       const std::string& what = "comparison") {
  return sign(y - x, bits, what) >= 0;
}

/// Decimal string of an enclosure midpoint, accurate to the printed digits
/// when the enclosure is narrow enough.
inline std::string to_decimal(const Log2Linear& x, int digits, int bits = default_precision_bits()) {
  const Enclosure e = x.enclose(bits);
  return to_decimal(Rational((e.lo + e.hi) / 2), digits);
}

}  // namespace emax
