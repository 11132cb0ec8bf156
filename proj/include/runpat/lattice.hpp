// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "runpat/combinatorics.hpp"
#include "runpat/rational.hpp"

namespace runpat {

// One index vector (r, k_1, …, k_d) of the signed-term accumulation.
struct LatticePoint {
  long long r = 0;
  std::vector<long long> k;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Constraint set G(n, t_max, |w_1|, …, |w_d|):
//   Σ k_i·|w_i| <= n,   max(0, Σ i·k_i - t_max) <= r <= Σ k_i.
struct LatticeSpec {
  long long n = 0;
  long long t_max = 0;
  std::vector<long long> lengths;

  void validate() const;
};

// Visits one call per feasible k-vector, carrying the full r-interval
// [r_lo, r_hi] plus the derived sums; k-vectors appear in ascending
// lexicographic order. rem_n = n - Σ k_i·|w_i|.
// f(std::span<const long long> k, long long sum_k, long long sum_ik,
//   long long rem_n, long long r_lo, long long r_hi)
template <typename F>
void enumerate_lattice_grouped(const LatticeSpec& spec, F&& f) {
  spec.validate();
  const std::size_t d = spec.lengths.size();
  std::vector<long long> k(d, 0);

  // Feasible k-vectors satisfy Σ_{i>=2} (i-1)·k_i <= t_max exactly when the
  // r-interval is nonempty, so that inequality prunes the recursion.
  auto recurse = [&](auto&& self, std::size_t dim, long long rem_n, long long rem_t,
                     long long sum_k, long long sum_ik) -> void {
    if (dim == d) {
      const long long r_lo = std::max<long long>(0, sum_ik - spec.t_max);
      f(std::span<const long long>(k), sum_k, sum_ik, rem_n, r_lo, sum_k);
      return;
    }
    const long long index = static_cast<long long>(dim) + 1;  // 1-based word index
    long long bound = rem_n / spec.lengths[dim];
    if (index >= 2) bound = std::min(bound, rem_t / (index - 1));
    for (long long v = 0; v <= bound; ++v) {
      k[dim] = v;
      self(self, dim + 1, rem_n - v * spec.lengths[dim],
           index >= 2 ? rem_t - v * (index - 1) : rem_t, sum_k + v, sum_ik + index * v);
    }
    k[dim] = 0;
  };
  recurse(recurse, 0, spec.n, spec.t_max, 0, 0);
}

// Streams every point of G exactly once, in ascending lexicographic
// (k_1, …, k_d, r) order. f(const LatticePoint&)
template <typename F>
void enumerate_lattice(const LatticeSpec& spec, F&& f) {
  LatticePoint point;
  enumerate_lattice_grouped(spec, [&](std::span<const long long> k, long long, long long,
                                      long long, long long r_lo, long long r_hi) {
    point.k.assign(k.begin(), k.end());
    for (long long r = r_lo; r <= r_hi; ++r) {
      point.r = r;
      f(point);
    }
  });
}

// |G| by direct enumeration (r-intervals summed without expansion).
Integer lattice_point_count(const LatticeSpec& spec);

// Number of distinct k-vectors appearing in the stream.
Integer distinct_k_count(const LatticeSpec& spec);

// Upper bound on |G|:
// ceil( (t+1) (t + d(d-1)/2)^{d-1} ((d-1)!)^{-2} (n/|w_1| + 1) ).
Integer lattice_size_bound(const LatticeSpec& spec);

// Upper bound (n + Σ|w_i|)^d / (d! Π|w_i|) on the number of k-vectors with
// Σ k_i·|w_i| <= n.
Rational simplex_count_bound(long long n, std::span<const long long> lengths);

}  // namespace runpat
