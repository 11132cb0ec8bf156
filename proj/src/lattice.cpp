// SPDX-License-Identifier: Apache-2.0
#include "runpat/lattice.hpp"

#include <stdexcept>

namespace runpat {

void LatticeSpec::validate() const {
  if (lengths.empty()) throw std::invalid_argument("lattice spec needs at least one word length");
  for (long long len : lengths)
    if (len <= 0) throw std::invalid_argument("word lengths must be positive");
  if (n < 0) throw std::invalid_argument("sample size must be nonnegative");
  if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
}

Integer lattice_point_count(const LatticeSpec& spec) {
  Integer count(0);
  enumerate_lattice_grouped(spec, [&](std::span<const long long>, long long, long long, long long,
                                      long long r_lo, long long r_hi) {
    count += static_cast<long>(r_hi - r_lo + 1);
  });
  return count;
}

Integer distinct_k_count(const LatticeSpec& spec) {
  Integer count(0);
  enumerate_lattice_grouped(spec, [&](std::span<const long long>, long long, long long, long long,
                                      long long, long long) { count += 1; });
  return count;
}

Integer lattice_size_bound(const LatticeSpec& spec) {
  spec.validate();
  const long long d = static_cast<long long>(spec.lengths.size());
  const long long t = spec.t_max;
  const Integer base(static_cast<long>(t) + static_cast<long>(d * (d - 1) / 2));
  const Integer power = d >= 2 ? integer_pow(base, static_cast<unsigned long>(d - 1)) : Integer(1);
  const Integer fac = factorial(d - 1);
  const Rational bound = Rational(static_cast<long>(t + 1)) * power / (fac * fac) *
                         (make_rational(spec.n, spec.lengths[0]) + 1);
  return ceil_rational(bound);
}

Rational simplex_count_bound(long long n, std::span<const long long> lengths) {
  if (lengths.empty()) throw std::invalid_argument("need at least one word length");
  long long sum = 0;
  Integer prod(1);
  for (long long len : lengths) {
    if (len <= 0) throw std::invalid_argument("word lengths must be positive");
    sum += len;
    prod *= static_cast<long>(len);
  }
  const long long d = static_cast<long long>(lengths.size());
  const Integer numerator = integer_pow(Integer(static_cast<long>(n + sum)), static_cast<unsigned long>(d));
  return make_rational(numerator, factorial(d) * prod);
}

}  // namespace runpat
