// SPDX-License-Identifier: Apache-2.0
#include "runpat/distributions.hpp"

#include <algorithm>
#include <stdexcept>

#include "runpat/combinatorics.hpp"
#include "runpat/lattice.hpp"

namespace runpat {

namespace {

Integer model_common_denominator(const ProbModel& model) {
  Integer c(1);
  for (std::size_t a = 0; a < model.alphabet_size(); ++a)
    mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), model.prob(static_cast<Symbol>(a)).get_den().get_mpz_t());
  return c;
}

// P(w) = word_numerator / c^{|w|} (not necessarily reduced).
Integer word_numerator(const ProbModel& model, const Word& w, const Integer& c) {
  Integer num(1), factor;
  for (Symbol a : w.symbols()) {
    const Rational& p = model.prob(a);
    mpz_divexact(factor.get_mpz_t(), c.get_mpz_t(), p.get_den().get_mpz_t());
    factor *= p.get_num();
    num *= factor;
  }
  return num;
}

struct ChainFold {
  // classes[cls][s] / scale = contribution to P(C_n = s) from lattice points
  // whose largest nonzero index is cls (cls = 0 is the zero vector).
  std::vector<std::vector<Integer>> classes;
  Integer scale;  // c^n
};

// Signed-term accumulation over the constraint lattice, with all arithmetic
// scaled by the common denominator c^n so the inner loop is pure integer
// work. Traversal order matches enumerate_lattice.
ChainFold fold_chain(const ProbModel& model, std::span<const Word> words, long long n,
                     long long t_max) {
  const std::size_t d = words.size();
  std::vector<long long> lengths(d);
  for (std::size_t i = 0; i < d; ++i) lengths[i] = static_cast<long long>(words[i].size());

  const Integer c = model_common_denominator(model);
  std::vector<Integer> nums(d);
  bool trivial = true;
  for (std::size_t i = 0; i < d; ++i) {
    nums[i] = word_numerator(model, words[i], c);
    trivial = trivial && nums[i] == 1;
  }

  std::vector<Integer> cpow(static_cast<std::size_t>(n) + 1);
  cpow[0] = 1;
  for (std::size_t e = 1; e <= static_cast<std::size_t>(n); ++e) cpow[e] = cpow[e - 1] * c;

  std::vector<std::vector<Integer>> wpow(d);
  if (!trivial) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t kmax = static_cast<std::size_t>(n / lengths[i]);
      wpow[i].resize(kmax + 1);
      wpow[i][0] = 1;
      for (std::size_t k = 1; k <= kmax; ++k) wpow[i][k] = wpow[i][k - 1] * nums[i];
    }
  }

  ChainFold out;
  out.scale = cpow[static_cast<std::size_t>(n)];
  out.classes.assign(d + 1, std::vector<Integer>(static_cast<std::size_t>(t_max) + 1, Integer(0)));

  BinomialCache binom;
  std::vector<long long> k(d, 0);
  std::vector<std::size_t> nonzero;
  std::vector<Integer> weight(d + 1);
  weight[0] = 1;
  Integer multinom, base;

  auto recurse = [&](auto&& self, std::size_t dim, long long rem_n, long long rem_t,
                     long long sum_k, long long sum_ik, std::size_t cls) -> void {
    if (dim == d) {
      multinom = 1;
      long long top = rem_n + sum_k;  // n - Σ|w_i|k_i + Σk_i
      for (std::size_t idx : nonzero) {
        multinom *= binom.at(top, k[idx]);
        top -= k[idx];
      }
      if (trivial) {
        base = multinom;
      } else {
        base = multinom * weight[d];
        if (base == 0) return;
      }
      base *= cpow[static_cast<std::size_t>(rem_n)];
      auto& bucket = out.classes[cls];
      const long long r_lo = std::max<long long>(0, sum_ik - t_max);
      for (long long r = r_lo; r <= sum_k; ++r) {
        auto* slot = bucket[static_cast<std::size_t>(sum_ik - r)].get_mpz_t();
        if (r & 1)
          mpz_submul(slot, base.get_mpz_t(), binom.at(sum_k, r).get_mpz_t());
        else
          mpz_addmul(slot, base.get_mpz_t(), binom.at(sum_k, r).get_mpz_t());
      }
      return;
    }
    const long long index = static_cast<long long>(dim) + 1;
    long long bound = rem_n / lengths[dim];
    if (index >= 2) bound = std::min(bound, rem_t / (index - 1));
    for (long long v = 0; v <= bound; ++v) {
      k[dim] = v;
      if (v > 0 && !trivial) weight[dim + 1] = weight[dim] * wpow[dim][static_cast<std::size_t>(v)];
      if (v == 0 && !trivial) weight[dim + 1] = weight[dim];
      if (v == 1) nonzero.push_back(dim);
      self(self, dim + 1, rem_n - v * lengths[dim], index >= 2 ? rem_t - v * (index - 1) : rem_t,
           sum_k + v, sum_ik + index * v, v > 0 ? static_cast<std::size_t>(index) : cls);
    }
    if (bound >= 1) nonzero.pop_back();
    k[dim] = 0;
  };
  recurse(recurse, 0, n, t_max, 0, 0, 0);
  return out;
}

PmfTable table_from_buckets(const std::vector<Rational>& buckets, bool truncated) {
  PmfTable table;
  table.probs = buckets;
  table.truncated = truncated;
  Rational mass(0);
  for (const Rational& p : table.probs) {
    if (p < 0 || p > 1) throw std::logic_error("internal error: bucket outside [0,1]");
    mass += p;
  }
  if (mass > 1) throw std::logic_error("internal error: probability mass exceeds 1");
  return table;
}

// Incremental knapsack: best[i] = max Σ j·k_j over the first i lengths with
// Σ k_j·lengths[j-1] <= capacity.
std::vector<long long> chain_support_prefixes(long long capacity,
                                              std::span<const long long> lengths) {
  std::vector<long long> best(lengths.size() + 1, 0);
  if (capacity < 0) return best;
  std::vector<long long> dp(static_cast<std::size_t>(capacity) + 1, 0);
  long long running = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const long long w = lengths[i];
    const long long value = static_cast<long long>(i) + 1;
    for (long long cap = w; cap <= capacity; ++cap) {
      dp[static_cast<std::size_t>(cap)] =
          std::max(dp[static_cast<std::size_t>(cap)], dp[static_cast<std::size_t>(cap - w)] + value);
      running = std::max(running, dp[static_cast<std::size_t>(cap)]);
    }
    best[i + 1] = running;
  }
  return best;
}

void validate_run_spec(const RunFamilySpec& spec, bool need_q) {
  if (spec.n < 1) throw std::invalid_argument("sample size n must be >= 1");
  if (!is_probability(spec.p)) throw std::domain_error("p must lie in [0,1]");
  if (need_q && spec.q() == 0)
    throw std::domain_error("q = 1 - p must be positive for run statistics");
}

void validate_m_list(const std::vector<long long>& m_list) {
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1) throw std::invalid_argument("run lengths must be >= 1");
    if (i > 0 && m_list[i] <= m_list[i - 1])
      throw std::invalid_argument("run lengths must be strictly increasing");
  }
}

PmfTable point_mass_at_zero() {
  PmfTable table;
  table.probs = {Rational(1)};
  table.truncated = false;
  return table;
}

std::vector<long long> run_lengths_of(const std::vector<long long>& m_list) {
  std::vector<long long> lengths;
  lengths.reserve(m_list.size());
  for (long long m : m_list) lengths.push_back(m + 1);
  return lengths;
}

}  // namespace

long long chain_support_max(long long capacity, std::span<const long long> lengths) {
  return chain_support_prefixes(capacity, lengths).back();
}

Rational allocation_weight(const ProbModel& model, const std::vector<Word>& words, long long n,
                           std::span<const long long> k) {
  if (words.size() != k.size())
    throw std::invalid_argument("count vector must have one entry per word");
  long long used = 0, sum_k = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) throw std::invalid_argument("counts must be nonnegative");
    used += k[i] * static_cast<long long>(words[i].size());
    sum_k += k[i];
  }
  if (used > n) return Rational(0);
  Rational value(multinomial(n - used + sum_k, k));
  for (std::size_t i = 0; i < k.size(); ++i)
    value *= rational_pow(model.word_probability(words[i]), k[i]);
  return value;
}

JointPmfTable joint_nonoverlapping_pmf(const ProbModel& model, const std::vector<Word>& words,
                                       long long n) {
  if (auto violation = find_overlap_violation(words))
    throw std::invalid_argument("overlapping word set: " + *violation);
  if (n < 0) throw std::invalid_argument("sample size must be nonnegative");

  const std::size_t h = words.size();
  std::vector<long long> lengths(h);
  std::vector<Rational> probs(h);
  for (std::size_t i = 0; i < h; ++i) {
    lengths[i] = static_cast<long long>(words[i].size());
    probs[i] = model.word_probability(words[i]);
  }

  JointPmfTable table;
  std::vector<long long> s(h, 0), k(h, 0);

  // P(N = s) = Σ_{k >= s, Σ|w_i|k_i <= n} (-1)^{Σ(k_i-s_i)}
  //            binom(n - Σ|w_i|k_i + Σk_i; s, k-s) Π P^{k_i}(w_i)
  auto sum_over_k = [&](auto&& self, std::size_t dim, long long rem_n, long long sum_k,
                        long long parity, const Rational& weight) -> Rational {
    if (dim == h) {
      std::vector<long long> parts;
      parts.reserve(2 * h);
      for (long long v : s) parts.push_back(v);
      for (std::size_t i = 0; i < h; ++i) parts.push_back(k[i] - s[i]);
      Rational term(multinomial(n - (n - rem_n) + sum_k, parts));
      term *= weight;
      return (parity & 1) ? -term : term;
    }
    Rational total(0);
    for (long long v = s[dim]; v * lengths[dim] <= rem_n; ++v) {
      k[dim] = v;
      total += self(self, dim + 1, rem_n - v * lengths[dim], sum_k + v, parity + (v - s[dim]),
                    weight * rational_pow(probs[dim], v));
    }
    return total;
  };

  auto over_s = [&](auto&& self, std::size_t dim, long long rem_n) -> void {
    if (dim == h) {
      table.entries[s] = sum_over_k(sum_over_k, 0, n, 0, 0, Rational(1));
      return;
    }
    for (long long v = 0; v * lengths[dim] <= rem_n; ++v) {
      s[dim] = v;
      self(self, dim + 1, rem_n - v * lengths[dim]);
    }
    s[dim] = 0;
  };
  over_s(over_s, 0, n);
  table.complete = true;
  return table;
}

Rational moment(const ProbModel& model, const Word& w, long long n, long long t) {
  if (t < 1) throw std::invalid_argument("moment order t must be >= 1");
  if (n < 0) throw std::invalid_argument("sample size must be nonnegative");
  if (!is_self_nonoverlapping(w))
    throw std::invalid_argument("word " + w.str() + " overlaps itself; moments need a nonoverlapping word");
  const Rational pw = model.word_probability(w);
  const long long len = static_cast<long long>(w.size());
  const long long s_max = std::min(n / len, t);
  Rational sum(0);
  for (long long s = 1; s <= s_max; ++s)
    sum += Rational(surjection_count(t, s)) * Rational(binomial(n - s * len + s, s)) *
           rational_pow(pw, s);
  return sum;
}

PmfTable chain_statistic_pmf(const ProbModel& model, const IncreasingChain& chain, long long n,
                             std::optional<long long> t_max) {
  if (n < 0) throw std::invalid_argument("sample size must be nonnegative");
  if (t_max && *t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  const auto lengths = chain.lengths();
  const long long support = chain_support_max(n, lengths);
  const long long t_eff = t_max ? std::min(*t_max, support) : support;
  const std::size_t d_eff =
      std::min(chain.size(), static_cast<std::size_t>(t_eff) + 1);

  const ChainFold fold =
      fold_chain(model, std::span<const Word>(chain.words().data(), d_eff), n, t_eff);
  std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1, Rational(0));
  Integer total;
  for (std::size_t s = 0; s < buckets.size(); ++s) {
    total = 0;
    for (const auto& cls : fold.classes) total += cls[s];
    buckets[s] = make_rational(total, fold.scale);
  }
  return table_from_buckets(buckets, t_eff < support);
}

std::map<long long, PmfTable> chain_family_pmfs(const ProbModel& model,
                                                const IncreasingChain& chain, long long n,
                                                long long t_max,
                                                const std::vector<long long>& depths) {
  if (n < 0) throw std::invalid_argument("sample size must be nonnegative");
  if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  const auto lengths = chain.lengths();
  for (long long d : depths)
    if (d < 1 || d > static_cast<long long>(chain.size()))
      throw std::invalid_argument("depth outside the chain");

  const auto supports = chain_support_prefixes(n, lengths);
  const long long support = supports.back();
  const long long t_eff = std::min(t_max, support);
  const std::size_t d_eff = std::min(chain.size(), static_cast<std::size_t>(t_eff) + 1);

  const ChainFold fold =
      fold_chain(model, std::span<const Word>(chain.words().data(), d_eff), n, t_eff);

  // prefix sums over the class index turn one pass into every depth's table
  std::vector<std::vector<Integer>> prefix(fold.classes.size());
  prefix[0] = fold.classes[0];
  for (std::size_t cls = 1; cls < fold.classes.size(); ++cls) {
    prefix[cls] = prefix[cls - 1];
    for (std::size_t s = 0; s < prefix[cls].size(); ++s) prefix[cls][s] += fold.classes[cls][s];
  }

  std::map<long long, PmfTable> out;
  for (long long d : depths) {
    const std::size_t cap = std::min(static_cast<std::size_t>(d), d_eff);
    std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1);
    for (std::size_t s = 0; s < buckets.size(); ++s)
      buckets[s] = make_rational(prefix[cap][s], fold.scale);
    out.emplace(d, table_from_buckets(buckets, t_eff < supports[static_cast<std::size_t>(d)]));
  }
  return out;
}

PmfTable prefixed_statistic_pmf(const RunFamilySpec& spec, std::optional<long long> t_max) {
  validate_run_spec(spec, true);
  validate_m_list(spec.m_list);
  if (t_max && *t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  if (spec.m_list.empty()) return point_mass_at_zero();

  const auto lengths = run_lengths_of(spec.m_list);
  const long long support = chain_support_max(spec.n + 1, lengths);
  const long long t_eff = t_max ? std::min(*t_max, support) : support;
  const std::size_t d_eff =
      std::min(spec.m_list.size(), static_cast<std::size_t>(t_eff) + 1);

  const std::vector<long long> capped(spec.m_list.begin(),
                                      spec.m_list.begin() + static_cast<long>(d_eff));
  const IncreasingChain chain = run_chain(capped);
  const ProbModel model = ProbModel::binary(spec.p);
  const PmfTable c_next = chain_statistic_pmf(model, chain, spec.n + 1, t_eff);
  const PmfTable c_here = chain_statistic_pmf(model, chain, spec.n, t_eff);

  const Rational q = spec.q();
  std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1);
  for (long long t = 0; t <= t_eff; ++t)
    buckets[static_cast<std::size_t>(t)] = (c_next.at(t) - spec.p * c_here.at(t)) / q;
  return table_from_buckets(buckets, t_eff < support);
}

std::map<long long, PmfTable> prefixed_family_pmfs(long long n, const Rational& p,
                                                   const std::vector<long long>& m_list,
                                                   long long t_max,
                                                   const std::vector<long long>& depths) {
  RunFamilySpec probe{n, 0, 0, m_list, p};
  validate_run_spec(probe, true);
  validate_m_list(m_list);
  if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  for (long long d : depths)
    if (d < 1 || d > static_cast<long long>(m_list.size()))
      throw std::invalid_argument("depth outside the m-list");

  const auto lengths = run_lengths_of(m_list);
  const auto supports = chain_support_prefixes(n + 1, lengths);
  const long long t_eff = std::min(t_max, supports.back());
  const std::size_t d_eff = std::min(m_list.size(), static_cast<std::size_t>(t_eff) + 1);

  const std::vector<long long> capped(m_list.begin(), m_list.begin() + static_cast<long>(d_eff));
  const IncreasingChain chain = run_chain(capped);
  const ProbModel model = ProbModel::binary(p);

  std::vector<long long> capped_depths;
  capped_depths.reserve(depths.size());
  for (long long d : depths)
    capped_depths.push_back(std::min<long long>(d, static_cast<long long>(d_eff)));

  const auto fam_next = chain_family_pmfs(model, chain, n + 1, t_eff, capped_depths);
  const auto fam_here = chain_family_pmfs(model, chain, n, t_eff, capped_depths);

  const Rational q = Rational(1) - p;
  std::map<long long, PmfTable> out;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    const PmfTable& c_next = fam_next.at(capped_depths[i]);
    const PmfTable& c_here = fam_here.at(capped_depths[i]);
    std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1);
    for (long long t = 0; t <= t_eff; ++t)
      buckets[static_cast<std::size_t>(t)] = (c_next.at(t) - p * c_here.at(t)) / q;
    out.emplace(depths[i],
                table_from_buckets(buckets,
                                   t_eff < supports[static_cast<std::size_t>(depths[i])]));
  }
  return out;
}

std::vector<long long> mu_overlap_m_list(long long n, long long m, long long mu) {
  if (m < 1) throw std::invalid_argument("run length m must be >= 1");
  if (mu < 0 || mu > m - 1) throw std::domain_error("mu must lie in [0, m-1]");
  if (n < 1) throw std::invalid_argument("sample size n must be >= 1");
  const long long h = n > mu ? (n - mu) / (m - mu) : 0;
  std::vector<long long> m_list;
  m_list.reserve(static_cast<std::size_t>(h));
  for (long long i = 1; i <= h; ++i) m_list.push_back(m * i - mu * (i - 1));
  return m_list;
}

PmfTable mu_overlap_pmf(const RunFamilySpec& spec, std::optional<long long> t_max) {
  validate_run_spec(spec, true);
  RunFamilySpec chain_spec = spec;
  chain_spec.m_list = mu_overlap_m_list(spec.n, spec.m, spec.mu);
  return prefixed_statistic_pmf(chain_spec, t_max);
}

PmfTable geq_run_pmf(const RunFamilySpec& spec, std::optional<long long> t_max) {
  validate_run_spec(spec, true);
  if (spec.m < 1) throw std::invalid_argument("run length m must be >= 1");
  RunFamilySpec chain_spec = spec;
  chain_spec.m_list = {spec.m};
  return prefixed_statistic_pmf(chain_spec, t_max);
}

Rational longest_run_waiting_tail(const RunFamilySpec& spec) {
  return geq_run_pmf(spec, 0).at(0);
}

namespace {

// P(Ē_{N,m} = t) buckets for t <= t_cap: the count of 1 0^m occurrences not
// extendable to 1 0^{m+1}, straight from the two-word substitution.
std::vector<Rational> ebar_buckets(long long capacity, long long m, const Rational& p,
                                   const Rational& q, long long t_cap, long long q_exp_offset) {
  std::vector<Rational> buckets(static_cast<std::size_t>(t_cap) + 1, Rational(0));
  for (long long k1 = 0; (m + 1) * k1 <= capacity; ++k1) {
    for (long long k2 = 0; (m + 1) * k1 + (m + 2) * k2 <= capacity; ++k2) {
      const long long sum_k = k1 + k2;
      Rational coeff(multinomial(capacity - m * k1 - (m + 1) * k2, {k1, k2}));
      coeff *= rational_pow(q, sum_k + q_exp_offset);
      coeff *= rational_pow(p, m * k1 + (m + 1) * k2);
      for (long long t = 0; t <= std::min(sum_k, t_cap); ++t) {
        Rational term = coeff * Rational(binomial(sum_k, t));
        if ((k1 - t) & 1) term = -term;
        buckets[static_cast<std::size_t>(t)] += term;
      }
    }
  }
  return buckets;
}

}  // namespace

PmfTable exact_run_pmf(const RunFamilySpec& spec, std::optional<long long> t_max) {
  validate_run_spec(spec, true);
  if (spec.m < 1) throw std::invalid_argument("run length m must be >= 1");
  if (t_max && *t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  const long long support = (spec.n + 1) / (spec.m + 1);
  const long long t_eff = t_max ? std::min(*t_max, support) : support;
  const Rational q = spec.q();

  const auto next = ebar_buckets(spec.n + 1, spec.m, spec.p, q, t_eff, 0);
  const auto here = ebar_buckets(spec.n, spec.m, spec.p, q, t_eff, 0);
  std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1);
  for (std::size_t t = 0; t < buckets.size(); ++t) buckets[t] = (next[t] - spec.p * here[t]) / q;
  return table_from_buckets(buckets, t_eff < support);
}

PmfTable exact_run_closed_form(long long n, long long m, const Rational& p,
                               std::optional<long long> t_max) {
  RunFamilySpec spec{n, m, 0, {}, p};
  validate_run_spec(spec, true);
  if (m < 1) throw std::invalid_argument("run length m must be >= 1");
  const long long support = (n + 1) / (m + 1);
  const long long t_eff = t_max ? std::min(*t_max, support) : support;
  const Rational q = spec.q();

  // the printed form: both sums carry q^{k_1+k_2-1}, the second an extra p
  const auto first = ebar_buckets(n + 1, m, p, q, t_eff, -1);
  const auto second = ebar_buckets(n, m, p, q, t_eff, -1);
  std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1);
  for (std::size_t t = 0; t < buckets.size(); ++t) buckets[t] = first[t] - p * second[t];
  return table_from_buckets(buckets, t_eff < support);
}

std::pair<Rational, Rational> reduce_countable_model(const std::vector<Rational>& probs,
                                                     std::size_t zero_symbol) {
  if (probs.empty()) throw std::invalid_argument("probability list must be nonempty");
  if (zero_symbol >= probs.size())
    throw std::out_of_range("distinguished symbol outside the probability list");
  Rational sum(0);
  for (const Rational& v : probs) {
    if (!is_probability(v)) throw std::domain_error("probabilities must lie in [0,1]");
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("probabilities must sum to exactly 1");
  const Rational p = probs[zero_symbol];
  return {p, Rational(1) - p};
}

namespace {

// Shared skeleton of the direct part-1 style evaluations: the signed lattice
// sum at the given capacity, with coefficient supplied per k-vector.
template <typename Coeff>
void direct_lattice_sum(long long capacity, long long t_eff,
                        const std::vector<long long>& lengths, std::vector<Rational>& buckets,
                        const Rational& sign_scale, Coeff&& coefficient) {
  LatticeSpec spec{capacity, t_eff, lengths};
  enumerate_lattice_grouped(spec, [&](std::span<const long long> k, long long sum_k,
                                      long long sum_ik, long long rem_n, long long r_lo,
                                      long long r_hi) {
    const Rational coeff = coefficient(k, sum_k, rem_n) * sign_scale;
    if (coeff == 0) return;
    for (long long r = r_lo; r <= r_hi; ++r) {
      Rational term = coeff * Rational(binomial(sum_k, r));
      if (r & 1) term = -term;
      buckets[static_cast<std::size_t>(sum_ik - r)] += term;
    }
  });
}

}  // namespace

PmfTable prefixed_pmf_direct(const RunFamilySpec& spec, std::optional<long long> t_max) {
  validate_run_spec(spec, true);
  validate_m_list(spec.m_list);
  if (spec.m_list.empty()) return point_mass_at_zero();

  const auto lengths_full = run_lengths_of(spec.m_list);
  const long long support = chain_support_max(spec.n + 1, lengths_full);
  const long long t_eff = t_max ? std::min(*t_max, support) : support;
  const std::size_t d_eff =
      std::min(spec.m_list.size(), static_cast<std::size_t>(t_eff) + 1);
  const std::vector<long long> lengths(lengths_full.begin(),
                                       lengths_full.begin() + static_cast<long>(d_eff));
  const Rational q = spec.q();

  // coefficient q^{Σk_i - 1} p^{Σ m_i k_i}; Σ m_i k_i = capacity - rem_n - Σk_i
  std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1, Rational(0));
  const Rational one(1);
  const Rational minus_p = -spec.p;
  for (const auto& [capacity, scale] :
       {std::pair<long long, const Rational&>{spec.n + 1, one},
        std::pair<long long, const Rational&>{spec.n, minus_p}}) {
    const long long cap = capacity;
    direct_lattice_sum(
        cap, t_eff, lengths, buckets, scale,
        [&spec, &q, cap](std::span<const long long> k, long long sum_k,
                         long long rem_n) -> Rational {
          return Rational(multinomial(rem_n + sum_k, k)) * rational_pow(q, sum_k - 1) *
                 rational_pow(spec.p, cap - rem_n - sum_k);
        });
  }
  return table_from_buckets(buckets, t_eff < support);
}

std::vector<Rational> prefixed_printed_part1_values(const RunFamilySpec& spec, long long t_max) {
  validate_run_spec(spec, true);
  validate_m_list(spec.m_list);
  if (spec.m_list.empty()) return {Rational(1)};

  const auto lengths_full = run_lengths_of(spec.m_list);
  const long long support = chain_support_max(spec.n + 1, lengths_full);
  const long long t_eff = std::min(t_max, support);
  const std::size_t d_eff =
      std::min(spec.m_list.size(), static_cast<std::size_t>(t_eff) + 1);
  const std::vector<long long> lengths(lengths_full.begin(),
                                       lengths_full.begin() + static_cast<long>(d_eff));

  // constant coefficient q^{h-1} p^{Σ m_i}, exactly as printed
  const Rational q = spec.q();
  long long m_total = 0;
  for (long long m : spec.m_list) m_total += m;
  const Rational constant =
      rational_pow(q, static_cast<long long>(spec.m_list.size()) - 1) *
      rational_pow(spec.p, m_total);

  auto coeff = [&](std::span<const long long> k, long long sum_k, long long rem_n) -> Rational {
    return Rational(multinomial(rem_n + sum_k, k)) * constant;
  };
  std::vector<Rational> buckets(static_cast<std::size_t>(t_eff) + 1, Rational(0));
  direct_lattice_sum(spec.n + 1, t_eff, lengths, buckets, Rational(1), coeff);
  direct_lattice_sum(spec.n, t_eff, lengths, buckets, -spec.p, coeff);
  return buckets;
}

Rational geq_run_closed_form(long long n, long long m, const Rational& p, long long t) {
  RunFamilySpec spec{n, m, 0, {}, p};
  validate_run_spec(spec, true);
  if (m < 1) throw std::invalid_argument("run length m must be >= 1");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const Rational q = spec.q();
  Rational first(0), second(0);
  for (long long k = t; k <= (n + 1) / (m + 1); ++k) {
    Rational term = Rational(multinomial(n + 1 - m * k, {t, k - t})) * rational_pow(q, k - 1) *
                    rational_pow(p, k * m);
    first += ((k - t) & 1) ? -term : term;
  }
  for (long long k = t; k <= n / (m + 1); ++k) {
    Rational term = Rational(multinomial(n - m * k, {t, k - t})) * rational_pow(q, k - 1) *
                    rational_pow(p, k * m + 1);
    second += ((k - t) & 1) ? -term : term;
  }
  return first - second;
}

Rational waiting_tail_closed_form(long long n, long long m, const Rational& p) {
  RunFamilySpec spec{n, m, 0, {}, p};
  validate_run_spec(spec, true);
  if (m < 1) throw std::invalid_argument("run length m must be >= 1");
  const Rational q = spec.q();
  Rational first(0), second(0);
  for (long long k = 0; k <= (n + 1) / (m + 1); ++k) {
    Rational term = Rational(binomial(n + 1 - m * k, k)) * rational_pow(q, k - 1) *
                    rational_pow(p, k * m);
    first += (k & 1) ? -term : term;
  }
  for (long long k = 0; k <= n / (m + 1); ++k) {
    Rational term =
        Rational(binomial(n - m * k, k)) * rational_pow(q, k - 1) * rational_pow(p, k * m + 1);
    second += (k & 1) ? -term : term;
  }
  return first - second;
}

}  // namespace runpat
