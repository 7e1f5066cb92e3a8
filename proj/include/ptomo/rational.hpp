// rational.hpp
// Exact arbitrary-precision integer and rational arithmetic, plus the
// small combinatorial helpers (factorials, binomials) used everywhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ptomo/errors.hpp"

namespace ptomo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  if (n < 0) throw domain_error("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= (n - k + i);
    b /= i;  // exact at every step
  }
  return b;
}

inline BigInt int_pow(BigInt base, int exp) {
  BigInt p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Renders "num/den", or just "num" for integers.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Parses a decimal string ("0.0125", "3", "-1.5", "1/80") into an exact
// rational. Used by the CLI so thresholds stay exact end to end.
Rational parse_rational(const std::string& text);

}  // namespace ptomo
