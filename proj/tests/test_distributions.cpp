// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "runpat/combinatorics.hpp"
#include "runpat/distributions.hpp"
#include "runpat/oracle.hpp"
#include "test_support.hpp"

using namespace runpat;
namespace ts = runpat::testing;
using Kind = StatisticSelector::Kind;

namespace {
const Rational kHalf = make_rational(1, 2);
const Rational kThird = make_rational(1, 3);
const ProbModel kFair = ProbModel::binary(kHalf);
}  // namespace

TEST_CASE("allocation weight") {
  const std::vector<Word> words{Word::parse("01")};
  CHECK(allocation_weight(kFair, words, 3, {{1}}) == kHalf);
  CHECK(allocation_weight(kFair, words, 3, {{0}}) == 1);
  CHECK(allocation_weight(kFair, words, 3, {{2}}) == 0);  // 2 copies do not fit
  const std::vector<Word> pair{Word::parse("10"), Word::parse("100")};
  CHECK(allocation_weight(kFair, pair, 4, {{0, 0}}) == 1);
  CHECK(allocation_weight(kFair, pair, 10, {{2, 3}}) == 0);  // 4+9 > 10
}

TEST_CASE("joint pmf of a single word") {
  const std::vector<Word> words{Word::parse("01")};
  const JointPmfTable table = joint_nonoverlapping_pmf(kFair, words, 3);
  CHECK(table.at({0}) == kHalf);
  CHECK(table.at({1}) == kHalf);
  CHECK(table.total_mass() == 1);
}

TEST_CASE("joint pmf of the nonoverlapping pair") {
  const std::vector<Word> words{Word::parse("00111"), Word::parse("00101")};
  const JointPmfTable table = joint_nonoverlapping_pmf(kFair, words, 5);
  CHECK(table.at({1, 0}) == make_rational(1, 32));
  CHECK(table.at({0, 1}) == make_rational(1, 32));
  CHECK(table.at({0, 0}) == make_rational(30, 32));
  CHECK(table.total_mass() == 1);
}

TEST_CASE("joint pmf degenerates to the zero vector when nothing fits") {
  const std::vector<Word> words{Word::parse("00111")};
  const JointPmfTable table = joint_nonoverlapping_pmf(kFair, words, 3);
  CHECK(table.at({0}) == 1);
  CHECK(table.total_mass() == 1);
}

TEST_CASE("joint pmf rejects overlapping sets, naming the offenders") {
  const std::vector<Word> words{Word::parse("10"), Word::parse("01")};
  CHECK_THROWS_WITH_AS(joint_nonoverlapping_pmf(kFair, words, 4),
                       doctest::Contains("10"), std::invalid_argument);
}

TEST_CASE("joint pmf equals the enumeration oracle") {
  const std::vector<std::vector<Word>> sets{
      {Word::parse("01")},
      {Word::parse("10")},
      {Word::parse("100")},
      {Word::parse("00111"), Word::parse("00101")}};
  for (const Rational& p : {kHalf, kThird}) {
    const ProbModel model = ProbModel::binary(p);
    for (const auto& words : sets) {
      for (long long n = 1; n <= 10; ++n) {
        const JointPmfTable mine = joint_nonoverlapping_pmf(model, words, n);
        const JointPmfTable oracle =
            brute_force_joint_pmf(model, StatisticSelector::joint(words), n);
        CHECK(mine.total_mass() == 1);
        for (const auto& [k, prob] : oracle.entries) CHECK(mine.at(k) == prob);
      }
    }
  }
}

TEST_CASE("binomial transform ties the allocation weight to the joint pmf") {
  // A(k) = Σ_t B(t) Π binom(t_i, k_i) with B from the enumeration oracle
  const std::vector<std::vector<Word>> sets{
      {Word::parse("01")}, {Word::parse("00111"), Word::parse("00101")}};
  for (const auto& words : sets) {
    for (long long n : {6LL, 10LL}) {
      const JointPmfTable oracle =
          brute_force_joint_pmf(kFair, StatisticSelector::joint(words), n);
      std::vector<long long> k(words.size(), 0);
      auto walk = [&](auto&& self, std::size_t dim) -> void {
        if (dim == words.size()) {
          Rational rhs(0);
          for (const auto& [t, prob] : oracle.entries) {
            Rational product = prob;
            for (std::size_t i = 0; i < k.size(); ++i)
              product *= Rational(binomial(t[i], k[i]));
            rhs += product;
          }
          CHECK(allocation_weight(kFair, words, n, k) == rhs);
          return;
        }
        for (long long v = 0;
             v * static_cast<long long>(words[dim].size()) <= n; ++v) {
          k[dim] = v;
          self(self, dim + 1);
        }
        k[dim] = 0;
      };
      walk(walk, 0);
    }
  }
}

TEST_CASE("moments: pinned values and errors") {
  const Word w = Word::parse("01");
  CHECK(moment(kFair, w, 3, 1) == kHalf);
  CHECK(moment(kFair, w, 3, 2) == kHalf);
  CHECK(moment(kFair, w, 3, 5) == kHalf);  // N is 0/1-valued at n=3
  CHECK_THROWS_AS(moment(kFair, Word::parse("00"), 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(moment(kFair, w, 5, 0), std::invalid_argument);
  CHECK(moment(kFair, Word::parse("01"), 1, 3) == 0);  // word does not fit
}

TEST_CASE("moments match the oracle pmf for t <= 4") {
  const std::vector<Word> words{Word::parse("01"), Word::parse("10"), Word::parse("100")};
  for (const Rational& p : {kHalf, kThird}) {
    const ProbModel model = ProbModel::binary(p);
    for (const Word& w : words) {
      for (long long n : {1LL, 4LL, 9LL, 12LL}) {
        const JointPmfTable oracle =
            brute_force_joint_pmf(model, StatisticSelector::joint({w}), n);
        for (long long t = 1; t <= 4; ++t) {
          Rational expected(0);
          for (const auto& [k, prob] : oracle.entries)
            expected += rational_pow(Rational(make_integer(k[0])), t) * prob;
          CHECK(moment(model, w, n, t) == expected);
        }
      }
    }
  }
}

TEST_CASE("chain statistic: pinned two-sample example") {
  const IncreasingChain chain{{Word::parse("10")}};
  const PmfTable table = chain_statistic_pmf(kFair, chain, 2);
  CHECK(table.at(0) == make_rational(3, 4));
  CHECK(table.at(1) == make_rational(1, 4));
  CHECK(table.total_mass() == 1);
  CHECK_FALSE(table.truncated);
  CHECK(table.support_max() == 1);
}

TEST_CASE("chain statistic equals the oracle, run and mixed chains") {
  const std::vector<std::vector<Word>> chains{
      {Word::parse("10")},
      {Word::parse("10"), Word::parse("100")},
      {Word::parse("10"), Word::parse("100"), Word::parse("1000")},
      {Word::parse("01"), Word::parse("011")},
      {Word::parse("01"), Word::parse("011"), Word::parse("0111")}};
  for (const Rational& p : {kHalf, kThird, make_rational(3, 4)}) {
    const ProbModel model = ProbModel::binary(p);
    for (const auto& words : chains) {
      const IncreasingChain chain{words};
      for (long long n = 1; n <= 10; ++n) {
        CHECK(ts::same_pmf(chain_statistic_pmf(model, chain, n),
                           brute_force_pmf(model, StatisticSelector::chain(words), n)));
      }
    }
  }
}

TEST_CASE("chain statistic truncation bookkeeping") {
  const IncreasingChain chain{{Word::parse("10")}};
  const PmfTable full = chain_statistic_pmf(kFair, chain, 8);
  CHECK_FALSE(full.truncated);
  CHECK(full.support_max() == 4);
  CHECK(full.total_mass() == 1);
  const PmfTable cut = chain_statistic_pmf(kFair, chain, 8, 2);
  CHECK(cut.truncated);
  CHECK(cut.support_max() == 2);
  for (long long t = 0; t <= 2; ++t) CHECK(cut.at(t) == full.at(t));
}

TEST_CASE("deep buckets are independent of chain words beyond the bucket cap") {
  // truncating the chain at depth t_max+1 never changes buckets <= t_max
  const ProbModel model = ProbModel::binary(kThird);
  const IncreasingChain deep = run_chain({1, 2, 3, 4, 5});
  const IncreasingChain shallow = run_chain({1, 2, 3});
  const PmfTable from_deep = chain_statistic_pmf(model, deep, 12, 2);
  const PmfTable from_shallow = chain_statistic_pmf(model, shallow, 12, 2);
  for (long long t = 0; t <= 2; ++t) CHECK(from_deep.at(t) == from_shallow.at(t));
}

TEST_CASE("chain counting identity for two-word run chains") {
  // A(k1,k2) = Σ_{k2<=t2, k1+k2<=t1+t2} B(t1,t2) binom(t2,k2)
  //            Σ_s binom(t2-k2, s) binom(t1, k1-s)   with B the oracle N' pmf
  const std::vector<Word> words{Word::parse("10"), Word::parse("100")};
  for (long long n = 2; n <= 12; n += 2) {
    const JointPmfTable prime =
        brute_force_joint_pmf(kFair, StatisticSelector::prime(words), n);
    for (long long k1 = 0; 2 * k1 <= n; ++k1) {
      for (long long k2 = 0; 2 * k1 + 3 * k2 <= n; ++k2) {
        Rational rhs(0);
        for (const auto& [t, prob] : prime.entries) {
          if (t[1] < k2 || t[0] + t[1] < k1 + k2) continue;
          Rational inner(0);
          for (long long s = 0; s <= t[1] - k2; ++s)
            inner += Rational(binomial(t[1] - k2, s)) * Rational(binomial(t[0], k1 - s));
          rhs += prob * Rational(binomial(t[1], k2)) * inner;
        }
        CHECK(allocation_weight(kFair, words, n, {{k1, k2}}) == rhs);
      }
    }
  }
}

TEST_CASE("prefixed statistic: pinned example and q=0 rejection") {
  const PmfTable table = prefixed_statistic_pmf({3, 0, 0, {2}, kHalf});
  CHECK(table.at(0) == make_rational(5, 8));
  CHECK(table.at(1) == make_rational(3, 8));
  CHECK(table.total_mass() == 1);
  CHECK_THROWS_AS(prefixed_statistic_pmf({3, 0, 0, {2}, Rational(1)}), std::domain_error);
  CHECK_THROWS_AS(prefixed_statistic_pmf({3, 0, 0, {2, 2}, kHalf}), std::invalid_argument);
}

TEST_CASE("prefixed statistic equals the oracle") {
  const std::vector<std::vector<long long>> m_lists{{1}, {2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (const Rational& p : {kHalf, kThird, make_rational(3, 4)}) {
    const ProbModel model = ProbModel::binary(p);
    for (const auto& m_list : m_lists) {
      for (long long n = 1; n <= 10; ++n) {
        RunFamilySpec spec{n, 0, 0, m_list, p};
        CHECK(ts::same_pmf(prefixed_statistic_pmf(spec),
                           brute_force_pmf(model, StatisticSelector::prefixed(m_list), n)));
      }
    }
  }
}

TEST_CASE("prefixed family pass equals per-depth evaluation") {
  const std::vector<long long> m_list{1, 2, 3, 4, 5, 6};
  const auto family = prefixed_family_pmfs(14, kThird, m_list, 5, {1, 3, 6});
  for (long long d : {1LL, 3LL, 6LL}) {
    const std::vector<long long> head(m_list.begin(), m_list.begin() + d);
    const PmfTable direct = prefixed_statistic_pmf({14, 0, 0, head, kThird}, 5);
    CHECK(ts::same_pmf(family.at(d), direct));
    CHECK(family.at(d).truncated == direct.truncated);
  }
}

TEST_CASE("mu-overlap chain construction") {
  CHECK(mu_overlap_m_list(16, 3, 1) == std::vector<long long>{3, 5, 7, 9, 11, 13, 15});
  CHECK(mu_overlap_m_list(16, 3, 0) == std::vector<long long>{3, 6, 9, 12, 15});
  CHECK(mu_overlap_m_list(2, 3, 0).empty());
  CHECK_THROWS_AS(mu_overlap_m_list(8, 3, 3), std::domain_error);
  CHECK_THROWS_AS(mu_overlap_m_list(8, 3, -1), std::domain_error);
}

TEST_CASE("mu-overlap pmf: pinned examples") {
  CHECK(ts::same_pmf(mu_overlap_pmf({3, 2, 0, {}, kHalf}),
                     PmfTable{{make_rational(5, 8), make_rational(3, 8)}, false}));
  const PmfTable m_pmf = mu_overlap_pmf({3, 2, 1, {}, kHalf});
  CHECK(m_pmf.at(0) == make_rational(5, 8));
  CHECK(m_pmf.at(1) == make_rational(2, 8));
  CHECK(m_pmf.at(2) == make_rational(1, 8));
  CHECK_THROWS_AS(mu_overlap_pmf({3, 2, 2, {}, kHalf}), std::domain_error);
}

TEST_CASE("run statistics equal the oracle across the whole small grid") {
  for (const Rational& p : {kHalf, kThird, make_rational(3, 4)}) {
    const ProbModel model = ProbModel::binary(p);
    for (long long n = 1; n <= 10; ++n) {
      for (long long m = 1; m <= 3; ++m) {
        RunFamilySpec spec{n, m, 0, {}, p};
        CHECK(ts::same_pmf(geq_run_pmf(spec),
                           brute_force_pmf(model, StatisticSelector::run(Kind::g_geq, m), n)));
        CHECK(ts::same_pmf(exact_run_pmf(spec),
                           brute_force_pmf(model, StatisticSelector::run(Kind::e_exact, m), n)));
        for (long long mu = 0; mu < m; ++mu) {
          RunFamilySpec mu_spec{n, m, mu, {}, p};
          CHECK(ts::same_pmf(
              mu_overlap_pmf(mu_spec),
              brute_force_pmf(model, StatisticSelector::run(Kind::n_mu, m, mu), n)));
        }
        const PmfTable longest =
            brute_force_pmf(model, StatisticSelector::run(Kind::l_longest, m), n);
        Rational below(0);
        for (long long j = 0; j < m; ++j) below += longest.at(j);
        CHECK(longest_run_waiting_tail(spec) == below);
      }
    }
  }
}

TEST_CASE("waiting-time tail: pinned cases") {
  CHECK(longest_run_waiting_tail({3, 2, 0, {}, kHalf}) == make_rational(5, 8));
  CHECK(longest_run_waiting_tail({3, 5, 0, {}, kHalf}) == 1);  // run cannot fit
  for (long long n : {1LL, 4LL, 7LL})
    CHECK(longest_run_waiting_tail({n, 1, 0, {}, kThird}) ==
          rational_pow(Rational(1) - kThird, n));  // no zeros at all
}

TEST_CASE("exact-run pmf: pinned examples") {
  const PmfTable e1 = exact_run_pmf({3, 1, 0, {}, kHalf});
  CHECK(e1.at(0) == make_rational(4, 8));
  CHECK(e1.at(1) == make_rational(3, 8));
  CHECK(e1.at(2) == make_rational(1, 8));
  CHECK(e1.total_mass() == 1);
  const PmfTable e3 = exact_run_pmf({3, 3, 0, {}, kHalf});
  CHECK(e3.at(0) == make_rational(7, 8));
  CHECK(e3.at(1) == make_rational(1, 8));
  CHECK(e3.total_mass() == 1);
}

TEST_CASE("countable-alphabet reduction") {
  const auto [p1, q1] = reduce_countable_model(
      {make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)}, 0);
  CHECK(p1 == kHalf);
  CHECK(q1 == kHalf);
  const auto [p2, q2] = reduce_countable_model({Rational(1)}, 0);
  CHECK(p2 == 1);
  CHECK(q2 == 0);
  const auto [p3, q3] = reduce_countable_model({kThird, kThird, kThird}, 2);
  CHECK(p3 == kThird);
  CHECK(q3 == make_rational(2, 3));
  CHECK_THROWS_AS(reduce_countable_model({kHalf, kThird}, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduce_countable_model({kHalf, kHalf}, 5), std::out_of_range);
}

TEST_CASE("ternary run statistics reduce to the binary model") {
  const std::vector<std::vector<Rational>> models{
      {make_rational(1, 2), make_rational(1, 4), make_rational(1, 4)},
      {kThird, kThird, kThird},
      {make_rational(1, 5), make_rational(2, 5), make_rational(2, 5)}};
  for (const auto& probs : models) {
    const auto [p, q] = reduce_countable_model(probs, 0);
    const ProbModel ternary{probs};
    for (long long n = 1; n <= 8; ++n) {
      for (long long m = 1; m <= 2; ++m) {
        RunFamilySpec spec{n, m, 0, {}, p};
        CHECK(ts::same_pmf(geq_run_pmf(spec),
                           brute_force_pmf(ternary, StatisticSelector::run(Kind::g_geq, m), n)));
        CHECK(ts::same_pmf(
            mu_overlap_pmf(spec),
            brute_force_pmf(ternary, StatisticSelector::run(Kind::n_mu, m, 0), n)));
        CHECK(ts::same_pmf(exact_run_pmf(spec),
                           brute_force_pmf(ternary, StatisticSelector::run(Kind::e_exact, m), n)));
      }
    }
  }
}

TEST_CASE("normalization holds for untruncated tables") {
  for (const Rational& p : {kHalf, kThird}) {
    for (long long n : {1LL, 7LL, 16LL, 33LL}) {
      for (long long m = 1; m <= 3; ++m) {
        CHECK(geq_run_pmf({n, m, 0, {}, p}).total_mass() == 1);
        CHECK(exact_run_pmf({n, m, 0, {}, p}).total_mass() == 1);
        for (long long mu = 0; mu < m; ++mu)
          CHECK(mu_overlap_pmf({n, m, mu, {}, p}).total_mass() == 1);
      }
      CHECK(prefixed_statistic_pmf({n, 0, 0, {1, 3, 4}, p}).total_mass() == 1);
    }
  }
}

TEST_CASE("direct corrected-coefficient evaluation matches the derived route") {
  const std::vector<std::vector<long long>> m_lists{{1}, {3}, {1, 2}, {2, 4}, {1, 3, 5}};
  for (const Rational& p : {kHalf, kThird}) {
    for (const auto& m_list : m_lists) {
      for (long long n : {1LL, 5LL, 9LL, 14LL, 20LL}) {
        RunFamilySpec spec{n, 0, 0, m_list, p};
        CHECK(ts::same_pmf(prefixed_statistic_pmf(spec), prefixed_pmf_direct(spec)));
      }
    }
  }
}

TEST_CASE("verbatim part-1 coefficient disagrees with the statistic") {
  // q^{h-1} p^{Σm_i} cannot be right: already for one word at n=3, m=2 the
  // values differ from the enumeration oracle (and are not even a pmf).
  RunFamilySpec spec{3, 0, 0, {2}, kHalf};
  const auto verbatim = prefixed_printed_part1_values(spec, 1);
  const PmfTable oracle =
      brute_force_pmf(kFair, StatisticSelector::prefixed({2}), 3);
  CHECK(verbatim[0] != oracle.at(0));
  Rational mass(0);
  for (const Rational& v : verbatim) mass += v;
  CHECK(mass != 1);
}

TEST_CASE("single-run closed forms match the derived route") {
  for (const Rational& p : {kHalf, kThird}) {
    for (long long n = 1; n <= 20; ++n) {
      for (long long m = 1; m <= 5; ++m) {
        RunFamilySpec spec{n, m, 0, {}, p};
        const PmfTable derived = geq_run_pmf(spec);
        for (long long t = 0; t <= derived.support_max(); ++t)
          CHECK(geq_run_closed_form(n, m, p, t) == derived.at(t));
        CHECK(waiting_tail_closed_form(n, m, p) == longest_run_waiting_tail(spec));
        CHECK(ts::same_pmf(exact_run_closed_form(n, m, p), exact_run_pmf(spec)));
      }
    }
  }
}

TEST_CASE("hand-evaluated closed-form value") {
  // first sum 3/2, second sum 7/8 at n=3, m=2, t=0
  CHECK(geq_run_closed_form(3, 2, kHalf, 0) == make_rational(5, 8));
}

TEST_CASE("moment consistency against the joint pmf") {
  for (long long n : {3LL, 8LL, 14LL}) {
    const JointPmfTable joint =
        joint_nonoverlapping_pmf(kFair, {Word::parse("10")}, n);
    for (long long t = 1; t <= 4; ++t) {
      Rational expected(0);
      for (const auto& [k, prob] : joint.entries)
        expected += rational_pow(Rational(make_integer(k[0])), t) * prob;
      CHECK(moment(kFair, Word::parse("10"), n, t) == expected);
    }
  }
}
