// SPDX-License-Identifier: Apache-2.0
#include "runpat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace runpat {

namespace {

// Lengths of the maximal runs of symbol 0 in x.
std::vector<long long> zero_run_lengths(const Word& x) {
  std::vector<long long> runs;
  long long current = 0;
  for (Symbol a : x.symbols()) {
    if (a == 0) {
      ++current;
    } else if (current > 0) {
      runs.push_back(current);
      current = 0;
    }
  }
  if (current > 0) runs.push_back(current);
  return runs;
}

long long run_statistic(const StatisticSelector& sel, const Word& x) {
  const long long m = sel.m;
  if (m < 1) throw std::invalid_argument("run statistics need m >= 1");
  using Kind = StatisticSelector::Kind;

  if (sel.kind == Kind::t_waiting) {
    long long zeros = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      zeros = (x[i] == 0) ? zeros + 1 : 0;
      if (zeros >= m) return static_cast<long long>(i) + 1;
    }
    return static_cast<long long>(x.size()) + 1;
  }

  const auto runs = zero_run_lengths(x);
  long long value = 0;
  switch (sel.kind) {
    case Kind::e_exact:
      for (long long len : runs) value += (len == m) ? 1 : 0;
      return value;
    case Kind::g_geq:
      for (long long len : runs) value += (len >= m) ? 1 : 0;
      return value;
    case Kind::m_overlap:
      for (long long len : runs) value += std::max<long long>(0, len - m + 1);
      return value;
    case Kind::n_nonoverlap:
      for (long long len : runs) value += len / m;
      return value;
    case Kind::n_mu: {
      if (sel.mu < 0 || sel.mu >= m) throw std::invalid_argument("mu must lie in [0, m-1]");
      for (long long len : runs)
        if (len >= m) value += 1 + (len - m) / (m - sel.mu);
      return value;
    }
    case Kind::l_longest:
      for (long long len : runs) value = std::max(value, len);
      return value;
    default:
      throw std::invalid_argument("not a run statistic");
  }
}

long long weighted_chain_sum(const std::vector<long long>& prime) {
  long long sum = 0;
  for (std::size_t i = 0; i < prime.size(); ++i) sum += static_cast<long long>(i + 1) * prime[i];
  return sum;
}

std::vector<long long> prime_counts(const std::vector<Word>& words, const Word& x) {
  std::vector<long long> counts = scan_counts(words, x);
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) counts[i] -= counts[i + 1];
  return counts;
}

Word prepend_one(const Word& x) {
  std::vector<Symbol> symbols;
  symbols.reserve(x.size() + 1);
  symbols.push_back(1);
  symbols.insert(symbols.end(), x.symbols().begin(), x.symbols().end());
  return Word(std::move(symbols));
}

std::vector<Word> prefixed_words(const std::vector<long long>& m_list) {
  std::vector<Word> words;
  words.reserve(m_list.size());
  for (long long m : m_list) words.push_back(run_word(m));
  return words;
}

// Enumerates all strings of length n in symbol-lexicographic order, calling
// visit(word, exact weight).
template <typename F>
void enumerate_strings(const ProbModel& model, long long n, F&& visit) {
  std::vector<Symbol> symbols(static_cast<std::size_t>(n), 0);
  std::vector<Rational> weight(static_cast<std::size_t>(n) + 1, Rational(1));
  const long long a = static_cast<long long>(model.alphabet_size());
  auto recurse = [&](auto&& self, long long pos) -> void {
    if (pos == n) {
      visit(Word(symbols), weight[static_cast<std::size_t>(n)]);
      return;
    }
    for (Symbol s = 0; s < a; ++s) {
      symbols[static_cast<std::size_t>(pos)] = s;
      weight[static_cast<std::size_t>(pos) + 1] = weight[static_cast<std::size_t>(pos)] * model.prob(s);
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
}

void check_budget(const ProbModel& model, long long n, const OracleBudget& budget) {
  if (n < 1) throw std::invalid_argument("oracle enumeration needs n >= 1");
  Integer total = integer_pow(Integer(static_cast<long>(model.alphabet_size())),
                              static_cast<unsigned long>(n));
  if (total > Integer(static_cast<long>(budget.max_strings)))
    throw std::runtime_error("oracle budget exceeded: |alphabet|^n = " + total.get_str() +
                             " > " + std::to_string(budget.max_strings) +
                             "; use the Monte Carlo mode or a smaller n");
}

}  // namespace

StatisticSelector StatisticSelector::joint(std::vector<Word> words) {
  return {Kind::n_joint, std::move(words), {}, 0, 0};
}
StatisticSelector StatisticSelector::prime(std::vector<Word> words) {
  return {Kind::n_prime, std::move(words), {}, 0, 0};
}
StatisticSelector StatisticSelector::chain(std::vector<Word> words) {
  return {Kind::c_chain, std::move(words), {}, 0, 0};
}
StatisticSelector StatisticSelector::prefixed(std::vector<long long> m_list) {
  return {Kind::d_prefixed, {}, std::move(m_list), 0, 0};
}
StatisticSelector StatisticSelector::run(Kind kind, long long m, long long mu) {
  return {kind, {}, {}, m, mu};
}

std::vector<long long> scan_counts(const std::vector<Word>& words, const Word& x) {
  if (words.empty()) throw std::invalid_argument("scan_counts needs at least one word");
  std::vector<long long> counts;
  counts.reserve(words.size());
  for (const Word& w : words)
    counts.push_back(static_cast<long long>(occurrence_positions(w, x).size()));
  return counts;
}

std::vector<long long> vector_statistic_on_string(const StatisticSelector& sel, const Word& x) {
  using Kind = StatisticSelector::Kind;
  switch (sel.kind) {
    case Kind::n_joint:
      return scan_counts(sel.words, x);
    case Kind::n_prime:
      return prime_counts(sel.words, x);
    default:
      throw std::invalid_argument("selector is not vector-valued");
  }
}

long long statistic_on_string(const StatisticSelector& sel, const Word& x) {
  using Kind = StatisticSelector::Kind;
  switch (sel.kind) {
    case Kind::c_chain:
      return weighted_chain_sum(prime_counts(sel.words, x));
    case Kind::d_prefixed: {
      if (sel.m_list.empty()) return 0;
      return weighted_chain_sum(prime_counts(prefixed_words(sel.m_list), prepend_one(x)));
    }
    case Kind::e_exact:
    case Kind::g_geq:
    case Kind::m_overlap:
    case Kind::n_nonoverlap:
    case Kind::n_mu:
    case Kind::l_longest:
    case Kind::t_waiting:
      return run_statistic(sel, x);
    default:
      throw std::invalid_argument("selector is not scalar-valued");
  }
}

PmfTable brute_force_pmf(const ProbModel& model, const StatisticSelector& sel, long long n,
                         const OracleBudget& budget) {
  check_budget(model, n, budget);
  std::map<long long, Rational> buckets;
  enumerate_strings(model, n, [&](const Word& x, const Rational& weight) {
    buckets[statistic_on_string(sel, x)] += weight;
  });
  PmfTable table;
  table.truncated = false;
  table.probs.assign(static_cast<std::size_t>(buckets.rbegin()->first) + 1, Rational(0));
  for (const auto& [value, mass] : buckets) table.probs[static_cast<std::size_t>(value)] = mass;
  return table;
}

JointPmfTable brute_force_joint_pmf(const ProbModel& model, const StatisticSelector& sel,
                                    long long n, const OracleBudget& budget) {
  check_budget(model, n, budget);
  JointPmfTable table;
  enumerate_strings(model, n, [&](const Word& x, const Rational& weight) {
    table.entries[vector_statistic_on_string(sel, x)] += weight;
  });
  table.complete = true;
  return table;
}

std::map<long long, std::pair<double, double>> monte_carlo_pmf(const ProbModel& model,
                                                               const StatisticSelector& sel,
                                                               long long n, long long samples,
                                                               std::uint64_t seed) {
  if (n < 1 || samples < 1) throw std::invalid_argument("need n >= 1 and samples >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> cumulative;
  double acc = 0.0;
  for (std::size_t a = 0; a < model.alphabet_size(); ++a) {
    acc += model.prob(static_cast<Symbol>(a)).get_d();
    cumulative.push_back(acc);
  }
  std::map<long long, long long> counts;
  std::vector<Symbol> symbols(static_cast<std::size_t>(n));
  for (long long s = 0; s < samples; ++s) {
    for (auto& sym : symbols) {
      const double u = uniform(rng);
      sym = static_cast<Symbol>(std::lower_bound(cumulative.begin(), cumulative.end(), u) -
                                cumulative.begin());
      if (sym >= static_cast<Symbol>(model.alphabet_size()))
        sym = static_cast<Symbol>(model.alphabet_size()) - 1;
    }
    counts[statistic_on_string(sel, Word(symbols))] += 1;
  }
  std::map<long long, std::pair<double, double>> out;
  for (const auto& [value, count] : counts) {
    const double freq = static_cast<double>(count) / static_cast<double>(samples);
    const double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(samples));
    out[value] = {freq, se};
  }
  return out;
}

}  // namespace runpat
