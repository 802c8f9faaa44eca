#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bottres/error.hpp"

namespace bottres {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals. No floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

/// num/den as an exact rational; accepts negative denominators (the
/// underlying constructor does not).
inline Rat make_rat(Int num, Int den) {
  if (den == 0) fail(Errc::BadParams, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(std::move(num), std::move(den));
}

/// Renders "p/q" in lowest terms, plain "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

inline Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    fail(Errc::ParseError, "not an integer: '" + text + "'");
  }
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline Int int_pow(Int base, unsigned exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

inline long long to_int64(const Int& v, const char* context) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) fail(Errc::BadParams, std::string(context) + ": value out of 64-bit range");
  return v.convert_to<long long>();
}

}  // namespace bottres
