// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "runpat/distributions.hpp"

namespace runpat {

// Exact sup-distance over 0 <= t <= r between the depth-d and depth-h
// prefixed statistics, plus the a-priori bound 2(n+1-m_{d+1}) p^{m_{d+1}}.
struct DistanceReport {
  long long d = 0;
  long long h = 0;
  long long r = 0;
  Rational distance;
  Rational bound;  // meaningful when d < |m_list|
};

enum class TruncationKind {
  d_statistic,  // 2 (n+1-m_next) p^{m_next}
  c_statistic   // (n-m_next) (1-p) p^{m_next}, i.e. (n-|w|+1) P(w) for w = 1 0^{m_next}
};

// Upper bound on the sup-distance induced by truncating the chain before the
// word of run length m_next; clamped to 0 when the word cannot fit.
Rational truncation_bound(long long n, const Rational& p, long long m_next,
                          TruncationKind kind = TruncationKind::d_statistic);

// sup_{0<=t<=r} |P(D over first d lengths = t) - P(D over first h lengths = t)|,
// both computed exactly with t_max = r. Requires d <= h <= |m_list|.
DistanceReport distribution_distance(long long n, const Rational& p,
                                     const std::vector<long long>& m_list, long long d,
                                     long long h, long long r);

// Same distances for several depths against one depth-h reference, sharing a
// single lattice pass per sample size.
std::vector<DistanceReport> distance_table(long long n, const Rational& p,
                                           const std::vector<long long>& m_list,
                                           const std::vector<long long>& depths, long long h,
                                           long long r);

// Depth-indexed D pmfs with t_max = r (curve data).
std::map<long long, PmfTable> depth_curves(long long n, const Rational& p,
                                           const std::vector<long long>& m_list,
                                           const std::vector<long long>& depths, long long r);

// Truncation depth d ≈ (log n + β)/γ with γ = -log p, β = (r+1) log 2 + log p
// (natural logs, evaluated in double precision), then verified against the
// exact bound at the minimal spacing m_{d+1} = d+1 and bumped until the bound
// is <= 2^{-r}. Guarantees sup-distance <= 2^{-r} for any admissible m-list.
long long select_depth(long long n, const Rational& p, long long r);

// The m-list m_i = offset + i, i = 1..h.
std::vector<long long> offset_m_list(long long offset, long long h);

// Built-in reference configuration: n = 1000, p = 1/2, m_i = 5+i, h = 995,
// r = 40, depths {1,3,5,7,9}.
std::vector<DistanceReport> reference_distance_table();

}  // namespace runpat
