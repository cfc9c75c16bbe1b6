#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace stratadiv {

/// Arbitrary-precision signed integer used throughout the library.
using Integer = boost::multiprecision::cpp_int;

inline Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  Integer r = 1;
  for (int t = 2; t <= n; ++t) r *= t;
  return r;
}

/// Falling factorial n * (n-1) * ... * (n-len+1), i.e. n!/(n-len)!.
inline Integer falling_factorial(int n, int len) {
  if (len < 0 || len > n) throw std::domain_error("falling_factorial out of range");
  Integer r = 1;
  for (int t = n - len + 1; t <= n; ++t) r *= t;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int t = 1; t <= k; ++t) {
    r *= (n - k + t);
    r /= t;  // exact at every step: r is C(n-k+t, t)
  }
  return r;
}

inline Integer pow2(int e) {
  if (e < 0) throw std::domain_error("pow2 of negative exponent");
  return Integer(1) << e;
}

}  // namespace stratadiv
