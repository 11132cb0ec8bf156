// SPDX-License-Identifier: Apache-2.0
#include "runpat/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace runpat {

Integer factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  static std::mutex mutex;
  static std::vector<Integer> table{Integer(1)};  // table[i] = i!
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long long>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[static_cast<std::size_t>(n)];
}

Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(long long n, std::span<const long long> parts) {
  if (n < 0) return Integer(0);
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) return Integer(0);
    sum += p;
    if (sum > n) return Integer(0);
  }
  Integer result = factorial(n);
  for (long long p : parts) {
    if (p > 1) mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), factorial(p).get_mpz_t());
  }
  const long long rest = n - sum;
  if (rest > 1) mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), factorial(rest).get_mpz_t());
  return result;
}

Integer multinomial(long long n, std::initializer_list<long long> parts) {
  return multinomial(n, std::span<const long long>(parts.begin(), parts.size()));
}

Integer surjection_count(long long t, long long s) {
  if (t < 1 || s < 1) throw std::invalid_argument("surjection_count requires t >= 1 and s >= 1");
  Integer sum(0), term, power;
  for (long long r = 1; r <= s; ++r) {
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(r));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(t));
    term *= power;
    if ((s - r) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

const Integer& BinomialCache::at(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (k > n - k) k = n - k;
  if (static_cast<std::size_t>(n) >= rows_.size()) rows_.resize(static_cast<std::size_t>(n) + 1);
  auto& row = rows_[static_cast<std::size_t>(n)];
  if (row.empty()) row.emplace_back(1);
  while (static_cast<long long>(row.size()) <= k) {
    const long long j = static_cast<long long>(row.size());
    Integer next = row.back() * static_cast<long>(n - j + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(j));
    row.push_back(std::move(next));
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace runpat
