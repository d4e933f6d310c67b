#pragma once
#include <string>

#include "errors.hpp"

namespace ppcode {

// base^e exactly, throwing rather than overflowing (desk-scale guard).
inline long long ipow_checked(long long base, long long e) {
  __int128 r = 1;
  for (long long i = 0; i < e; ++i) {
    r *= base;
    if (r > (__int128)4e18)
      throw internal_error("integer power " + std::to_string(base) + "^" + std::to_string(e) +
                           " exceeds 64-bit range");
  }
  return (long long)r;
}

// C(n, k) exactly via the stepwise product; throws on 64-bit overflow.
inline long long binomial_ll(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (__int128)4e18) throw internal_error("binomial coefficient exceeds 64-bit range");
  }
  return (long long)r;
}

}  // namespace ppcode
