// Copyright 2026 the latwalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LATWALK_BIGINT_HPP
#define LATWALK_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace latwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k) with the combinatorial convention: zero whenever n < 0, k < 0, or
// k > n.  Exact at any size.
inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace latwalk

#endif  // LATWALK_BIGINT_HPP
