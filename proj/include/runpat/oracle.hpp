// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "runpat/pmf.hpp"
#include "runpat/word.hpp"

namespace runpat {

// Which statistic to evaluate on a concrete string / in a brute-force pmf.
struct StatisticSelector {
  enum class Kind {
    n_joint,       // occurrence-count vector N(w_1..w_h; x)
    n_prime,       // successive differences N' over a prefix chain
    c_chain,       // Σ i·k_i with (k_i) = N'(w_1..w_h; x)
    d_prefixed,    // Σ i·k_i with (k_i) = N'(1 0^{m_1}, …; 1x)
    e_exact,       // maximal 0-runs of length exactly m
    g_geq,         // maximal 0-runs of length >= m
    m_overlap,     // overlapping count of 0^m
    n_nonoverlap,  // nonoverlapping count of 0^m
    n_mu,          // mu-overlapping count of 0^m
    l_longest,     // longest 0-run length
    t_waiting      // first completion time of 0^m; |x|+1 when absent
  };

  Kind kind;
  std::vector<Word> words;        // n_joint, n_prime, c_chain
  std::vector<long long> m_list;  // d_prefixed
  long long m = 0;                // run kinds
  long long mu = 0;               // n_mu

  static StatisticSelector joint(std::vector<Word> words);
  static StatisticSelector prime(std::vector<Word> words);
  static StatisticSelector chain(std::vector<Word> words);
  static StatisticSelector prefixed(std::vector<long long> m_list);
  static StatisticSelector run(Kind kind, long long m, long long mu = 0);
};

// N(w_1, …, w_h; x): occurrences of each word at every position (overlaps
// allowed).
std::vector<long long> scan_counts(const std::vector<Word>& words, const Word& x);

// Vector-valued kinds (n_joint, n_prime).
std::vector<long long> vector_statistic_on_string(const StatisticSelector& sel, const Word& x);

// Scalar kinds. Run statistics are computed from the run-length decomposition
// of x (maximal 0-runs), not via word chains, so this path shares nothing
// with the closed-form evaluators it is used to check.
long long statistic_on_string(const StatisticSelector& sel, const Word& x);

struct OracleBudget {
  long long max_strings = 1LL << 22;
};

// Exhaustive-enumeration pmf: every string of length n, weighted exactly by
// Π P(x_i), bucketed by statistic value. Throws when |alphabet|^n exceeds the
// budget.
PmfTable brute_force_pmf(const ProbModel& model, const StatisticSelector& sel, long long n,
                         const OracleBudget& budget = {});
JointPmfTable brute_force_joint_pmf(const ProbModel& model, const StatisticSelector& sel,
                                    long long n, const OracleBudget& budget = {});

// Sampling estimate for n beyond the enumeration budget: value -> (relative
// frequency, standard error). Advisory only; never a substitute for the exact
// oracle.
std::map<long long, std::pair<double, double>> monte_carlo_pmf(const ProbModel& model,
                                                               const StatisticSelector& sel,
                                                               long long n, long long samples,
                                                               std::uint64_t seed);

}  // namespace runpat
