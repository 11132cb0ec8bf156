// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "runpat/rational.hpp"

namespace runpat {

// Dense table of P(statistic = t) for t = 0 .. support_max(). When truncated
// is false the table covers the full support and sums to exactly 1.
struct PmfTable {
  std::vector<Rational> probs;
  bool truncated = false;

  long long support_max() const { return static_cast<long long>(probs.size()) - 1; }
  Rational at(long long t) const;  // 0 outside the table
  Rational total_mass() const;
};

// Exact joint table over count vectors (k_1, …, k_h). complete means every
// vector of positive probability is present, so the mass is exactly 1.
struct JointPmfTable {
  std::map<std::vector<long long>, Rational> entries;
  bool complete = true;

  Rational at(const std::vector<long long>& k) const;  // 0 if absent
  Rational total_mass() const;
};

}  // namespace runpat
