// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "runpat/pmf.hpp"
#include "runpat/word.hpp"

namespace runpat {

// Parameters of the run-statistic family over binary trials with P(X=0) = p,
// P(X=1) = q = 1-p. Single-length statistics use m (and mu where relevant);
// the prefixed weighted statistic uses m_list with m_1 < … < m_h.
struct RunFamilySpec {
  long long n = 0;
  long long m = 0;
  long long mu = 0;
  std::vector<long long> m_list;
  Rational p;

  Rational q() const { return Rational(1) - p; }
};

// A(k_1,…,k_h) = binom(n - Σ|w_i|k_i + Σk_i; k_1,…,k_h) Π P^{k_i}(w_i);
// zero when the words cannot fit (Σ|w_i|k_i > n).
Rational allocation_weight(const ProbModel& model, const std::vector<Word>& words, long long n,
                           std::span<const long long> k);

// Exact joint occurrence distribution of a nonoverlapping word set via the
// signed multinomial sum. Complete support; mass exactly 1.
JointPmfTable joint_nonoverlapping_pmf(const ProbModel& model, const std::vector<Word>& words,
                                       long long n);

// E(N^t(w; X^n)) for a self-nonoverlapping word, all orders t >= 1.
Rational moment(const ProbModel& model, const Word& w, long long n, long long t);

// P(C_{n,(w_1,…,w_h)} = t) for t = 0..t_max by folding signed terms over the
// constraint lattice. Full support when t_max is omitted; truncated flag set
// when t_max cuts the support. Values beyond bucket index min(h, t_max+1)-1
// cannot receive contributions from deeper chain words, so enumeration is
// capped at that dimension without changing any reported bucket.
PmfTable chain_statistic_pmf(const ProbModel& model, const IncreasingChain& chain, long long n,
                             std::optional<long long> t_max = std::nullopt);

// One lattice pass yielding P(C over the first d words = t) for every
// requested depth d. Exact and identical to running chain_statistic_pmf per
// depth.
std::map<long long, PmfTable> chain_family_pmfs(const ProbModel& model,
                                                const IncreasingChain& chain, long long n,
                                                long long t_max,
                                                const std::vector<long long>& depths);

// P(D_{n,(m_1,…,m_h)} = t): the prefix-corrected statistic, computed as
// (C at n+1 minus p·C at n)/q over the chain w_i = 1 0^{m_i}. Requires q > 0.
// An empty m_list yields the point mass at 0.
PmfTable prefixed_statistic_pmf(const RunFamilySpec& spec,
                                std::optional<long long> t_max = std::nullopt);

// Depth-indexed D tables sharing one pass per sample size.
std::map<long long, PmfTable> prefixed_family_pmfs(long long n, const Rational& p,
                                                   const std::vector<long long>& m_list,
                                                   long long t_max,
                                                   const std::vector<long long>& depths);

// The chain lengths m_i = m·i - mu·(i-1), i = 1..floor((n-mu)/(m-mu)).
std::vector<long long> mu_overlap_m_list(long long n, long long m, long long mu);

// P(N_{n,m,mu} = t): mu-overlapping run counting; mu = 0 is nonoverlapping
// counting, mu = m-1 is overlapping counting.
PmfTable mu_overlap_pmf(const RunFamilySpec& spec, std::optional<long long> t_max = std::nullopt);

// P(G_{n,m} = t): count of maximal 0-runs of length >= m.
PmfTable geq_run_pmf(const RunFamilySpec& spec, std::optional<long long> t_max = std::nullopt);

// P(L_n < m) = P(T_m > n) = P(D_{n,(m)} = 0).
Rational longest_run_waiting_tail(const RunFamilySpec& spec);

// P(E_{n,m} = t): count of maximal 0-runs of length exactly m, via the
// two-word transform (1 0^m, 1 0^{m+1}) followed by the prefix correction.
PmfTable exact_run_pmf(const RunFamilySpec& spec, std::optional<long long> t_max = std::nullopt);

// Collapses a countable-alphabet model onto the binary run parameters:
// p = probability of the distinguished symbol, q = 1-p.
std::pair<Rational, Rational> reduce_countable_model(const std::vector<Rational>& probs,
                                                     std::size_t zero_symbol);

// --- independent closed-form evaluators used for cross-checking ---

// Direct two-sum evaluation of the D distribution with the consistent
// coefficient q^{Σk_i - 1} p^{Σ m_i k_i}.
PmfTable prefixed_pmf_direct(const RunFamilySpec& spec,
                             std::optional<long long> t_max = std::nullopt);

// The same two sums with the constant coefficient q^{h-1} p^{Σ m_i} taken
// verbatim; disagrees with the statistic for most inputs (values need not be
// probabilities), kept as documentation of the discrepancy.
std::vector<Rational> prefixed_printed_part1_values(const RunFamilySpec& spec, long long t_max);

// Single-run closed forms evaluated term by term.
Rational geq_run_closed_form(long long n, long long m, const Rational& p, long long t);
Rational waiting_tail_closed_form(long long n, long long m, const Rational& p);
PmfTable exact_run_closed_form(long long n, long long m, const Rational& p,
                               std::optional<long long> t_max = std::nullopt);

// Largest achievable Σ i·k_i subject to Σ k_i·lengths[i-1] <= capacity.
long long chain_support_max(long long capacity, std::span<const long long> lengths);

}  // namespace runpat
