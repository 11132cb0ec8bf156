// SPDX-License-Identifier: Apache-2.0
#include "runpat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace runpat {

Rational truncation_bound(long long n, const Rational& p, long long m_next, TruncationKind kind) {
  if (m_next < 1) throw std::invalid_argument("m_next must be >= 1");
  if (!is_probability(p)) throw std::domain_error("p must lie in [0,1]");
  switch (kind) {
    case TruncationKind::d_statistic: {
      if (n + 1 <= m_next) return Rational(0);
      return Rational(2) * Rational(static_cast<long>(n + 1 - m_next)) * rational_pow(p, m_next);
    }
    case TruncationKind::c_statistic: {
      if (n <= m_next) return Rational(0);
      return Rational(static_cast<long>(n - m_next)) * (Rational(1) - p) * rational_pow(p, m_next);
    }
  }
  throw std::logic_error("unknown truncation kind");
}

std::vector<DistanceReport> distance_table(long long n, const Rational& p,
                                           const std::vector<long long>& m_list,
                                           const std::vector<long long>& depths, long long h,
                                           long long r) {
  if (h < 1 || h > static_cast<long long>(m_list.size()))
    throw std::invalid_argument("reference depth h outside the m-list");
  for (long long d : depths)
    if (d < 1 || d > h) throw std::invalid_argument("depth d must satisfy 1 <= d <= h");
  if (r < 0) throw std::invalid_argument("range cap r must be nonnegative");

  std::vector<long long> wanted = depths;
  wanted.push_back(h);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  const auto family = prefixed_family_pmfs(n, p, m_list, r, wanted);
  const PmfTable& reference = family.at(h);

  std::vector<DistanceReport> reports;
  reports.reserve(depths.size());
  for (long long d : depths) {
    const PmfTable& table = family.at(d);
    Rational distance(0);
    for (long long t = 0; t <= r; ++t) {
      Rational diff = table.at(t) - reference.at(t);
      if (diff < 0) diff = -diff;
      if (diff > distance) distance = diff;
    }
    DistanceReport report{d, h, r, distance, Rational(0)};
    if (d < static_cast<long long>(m_list.size()))
      report.bound = truncation_bound(n, p, m_list[static_cast<std::size_t>(d)]);
    reports.push_back(std::move(report));
  }
  return reports;
}

DistanceReport distribution_distance(long long n, const Rational& p,
                                     const std::vector<long long>& m_list, long long d,
                                     long long h, long long r) {
  if (d > h) throw std::invalid_argument("depth d must satisfy d <= h");
  return distance_table(n, p, m_list, {d}, h, r).front();
}

std::map<long long, PmfTable> depth_curves(long long n, const Rational& p,
                                           const std::vector<long long>& m_list,
                                           const std::vector<long long>& depths, long long r) {
  return prefixed_family_pmfs(n, p, m_list, r, depths);
}

long long select_depth(long long n, const Rational& p, long long r) {
  if (n < 1) throw std::invalid_argument("sample size n must be >= 1");
  if (r < 1) throw std::invalid_argument("range exponent r must be >= 1");
  if (!(p > 0) || !(p < 1)) throw std::domain_error("p must lie strictly inside (0,1)");

  const double gamma = -std::log(p.get_d());
  const double beta = static_cast<double>(r + 1) * std::log(2.0) + std::log(p.get_d());
  long long d = static_cast<long long>(
      std::ceil((std::log(static_cast<double>(n)) + beta) / gamma));
  if (d < 1) d = 1;

  // the asymptotic formula can land one short; verify with the exact bound at
  // the worst-case spacing m_{d+1} = d+1
  const Rational target = rational_pow(Rational(2), -r);
  while (d <= n && truncation_bound(n, p, d + 1) > target) ++d;
  return d;
}

std::vector<long long> offset_m_list(long long offset, long long h) {
  if (h < 1) throw std::invalid_argument("need at least one chain word");
  std::vector<long long> m_list;
  m_list.reserve(static_cast<std::size_t>(h));
  for (long long i = 1; i <= h; ++i) m_list.push_back(offset + i);
  return m_list;
}

std::vector<DistanceReport> reference_distance_table() {
  return distance_table(1000, make_rational(1, 2), offset_m_list(5, 995), {1, 3, 5, 7, 9}, 995,
                        40);
}

}  // namespace runpat
