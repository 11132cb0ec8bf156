// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "runpat/rational.hpp"

namespace runpat {

// n! with a process-wide memo table (safe for concurrent callers).
Integer factorial(long long n);

// Binomial coefficient; 0 whenever n < 0, k < 0, or k > n.
Integer binomial(long long n, long long k);

// Multinomial coefficient n! / (a_1! … a_l! (n - Σa_i)!).
// Returns 0 when n < 0, any part is negative, or Σ parts > n; this matches
// the implicit vanishing-term convention of the summation formulas built on
// top of it.
Integer multinomial(long long n, std::span<const long long> parts);
Integer multinomial(long long n, std::initializer_list<long long> parts);

// Number of surjections {1..t} -> {1..s}, via the alternating sum
// Σ_r binom(s,r) r^t (-1)^{s-r}. Zero exactly when s > t. Requires t,s >= 1.
Integer surjection_count(long long t, long long s);

// Lazily filled rows of binomial coefficients, confined to one computation
// (not thread-safe; create one per fold).
class BinomialCache {
 public:
  const Integer& at(long long n, long long k);

 private:
  std::vector<std::vector<Integer>> rows_;
  Integer zero_{0};
};

}  // namespace runpat
