// SPDX-License-Identifier: Apache-2.0
#include "runpat/pmf.hpp"

namespace runpat {

Rational PmfTable::at(long long t) const {
  if (t < 0 || t >= static_cast<long long>(probs.size())) return Rational(0);
  return probs[static_cast<std::size_t>(t)];
}

Rational PmfTable::total_mass() const {
  Rational sum(0);
  for (const Rational& p : probs) sum += p;
  return sum;
}

Rational JointPmfTable::at(const std::vector<long long>& k) const {
  const auto it = entries.find(k);
  return it == entries.end() ? Rational(0) : it->second;
}

Rational JointPmfTable::total_mass() const {
  Rational sum(0);
  for (const auto& [k, p] : entries) sum += p;
  return sum;
}

}  // namespace runpat
