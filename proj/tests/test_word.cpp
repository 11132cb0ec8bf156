// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "runpat/word.hpp"
#include "test_support.hpp"

using namespace runpat;
namespace ts = runpat::testing;

TEST_CASE("word construction and parsing") {
  CHECK(Word::parse("100").symbols() == std::vector<Symbol>{1, 0, 0});
  CHECK(Word::parse("100").str() == "100");
  CHECK_THROWS_AS(Word(std::vector<Symbol>{}), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("10a"), std::invalid_argument);
}

TEST_CASE("self-nonoverlap: pinned cases") {
  CHECK(is_self_nonoverlapping(Word::parse("10")));
  CHECK_FALSE(is_self_nonoverlapping(Word::parse("00")));
  CHECK(is_self_nonoverlapping(Word::parse("0")));
  CHECK(is_self_nonoverlapping(Word::parse("00111")));
  CHECK(is_self_nonoverlapping(Word::parse("00101")));
  CHECK_FALSE(is_self_nonoverlapping(Word::parse("010")));
}

TEST_CASE("witness search agrees with full string enumeration on short words") {
  for (const Word& w : ts::all_binary_words(6))
    CHECK(ts::self_overlapping_by_witness(w) == ts::self_overlapping_by_enumeration(w));
}

TEST_CASE("border criterion equals the definitional check for |w| <= 12") {
  for (const Word& w : ts::all_binary_words(12))
    CHECK(is_self_nonoverlapping(w) == !ts::self_overlapping_by_witness(w));
}

TEST_CASE("pair nonoverlap: pinned cases") {
  CHECK(is_nonoverlapping_set({Word::parse("00111"), Word::parse("00101")}));
  CHECK_FALSE(is_nonoverlapping_set({Word::parse("10"), Word::parse("01")}));
  CHECK(is_nonoverlapping_set({Word::parse("10")}));
  CHECK_FALSE(is_nonoverlapping_set({Word::parse("00")}));
  CHECK_THROWS_AS(is_nonoverlapping_set({}), std::invalid_argument);
}

TEST_CASE("singleton sets reduce to the self check") {
  for (const Word& w : ts::all_binary_words(8))
    CHECK(is_nonoverlapping_set({w}) == is_self_nonoverlapping(w));
}

TEST_CASE("pair witness search agrees with full string enumeration on short words") {
  const auto words = ts::all_binary_words(4);
  for (const Word& x : words)
    for (const Word& y : words)
      CHECK(ts::pair_overlapping_by_witness(x, y) == ts::pair_overlapping_by_enumeration(x, y));
}

TEST_CASE("pair check equals the definitional check for |x|,|y| <= 8") {
  const auto words = ts::all_binary_words(8, 5);  // longer pairs; short ones covered above
  for (std::size_t i = 0; i < words.size(); i += 7) {
    for (std::size_t j = i + 1; j < words.size(); j += 5) {
      const Word& x = words[i];
      const Word& y = words[j];
      if (x == y) continue;
      const bool expected = !ts::self_overlapping_by_witness(x) &&
                            !ts::self_overlapping_by_witness(y) &&
                            !ts::pair_overlapping_by_witness(x, y);
      CHECK(is_nonoverlapping_set({x, y}) == expected);
    }
  }
}

TEST_CASE("overlap violations carry the offending words") {
  auto msg = find_overlap_violation({Word::parse("10"), Word::parse("01")});
  REQUIRE(msg.has_value());
  CHECK(msg->find("10") != std::string::npos);
  CHECK(msg->find("01") != std::string::npos);
  auto self_msg = find_overlap_violation({Word::parse("00")});
  REQUIRE(self_msg.has_value());
  CHECK(self_msg->find("00") != std::string::npos);
}

TEST_CASE("increasing chains: pinned cases") {
  CHECK(validate_increasing_chain({Word::parse("10"), Word::parse("100"), Word::parse("1000")}));
  CHECK_FALSE(validate_increasing_chain({Word::parse("0"), Word::parse("00")}));
  CHECK_FALSE(validate_increasing_chain({Word::parse("10"), Word::parse("01")}));   // not a prefix
  CHECK_FALSE(validate_increasing_chain({Word::parse("100"), Word::parse("10")}));  // wrong order
  CHECK_FALSE(validate_increasing_chain({}));
  CHECK(validate_increasing_chain({Word::parse("01"), Word::parse("011")}));
}

TEST_CASE("every run chain validates") {
  CHECK(validate_increasing_chain(run_chain({1, 2, 3}).words()));
  CHECK(validate_increasing_chain(run_chain({2, 5, 9, 14}).words()));
  CHECK(validate_increasing_chain(run_chain({3, 6, 9, 12, 15}).words()));
  CHECK(run_chain({2}).words()[0].str() == "100");
  CHECK_THROWS_AS(run_chain({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(run_chain({0}), std::invalid_argument);
}

TEST_CASE("chain constructor rejects invalid input") {
  CHECK_THROWS_AS(IncreasingChain({Word::parse("0"), Word::parse("00")}), std::invalid_argument);
  const IncreasingChain chain{{Word::parse("10"), Word::parse("100")}};
  CHECK(chain.lengths() == std::vector<long long>{2, 3});
}

TEST_CASE("word probabilities") {
  const ProbModel fair = ProbModel::binary(make_rational(1, 2));
  for (const Word& w : ts::all_binary_words(5, 5))
    CHECK(fair.word_probability(w) == make_rational(1, 32));

  const ProbModel biased = ProbModel::binary(make_rational(1, 3));
  CHECK(biased.word_probability(Word::parse("10")) == make_rational(2, 9));
  CHECK(biased.word_probability(Word::parse("0")) == make_rational(1, 3));
  CHECK(biased.word_probability(Word::parse("1")) == make_rational(2, 3));

  CHECK_THROWS_AS(biased.word_probability(Word::parse("120")), std::out_of_range);
}

TEST_CASE("word probability is multiplicative and in [0,1]") {
  const ProbModel model({make_rational(1, 6), make_rational(1, 3), make_rational(1, 2)});
  const Word x = Word::parse("102");
  const Word y = Word::parse("21");
  std::vector<Symbol> xy = x.symbols();
  xy.insert(xy.end(), y.symbols().begin(), y.symbols().end());
  CHECK(model.word_probability(Word(xy)) ==
        model.word_probability(x) * model.word_probability(y));
  for (const Word& w : ts::all_binary_words(6))
    CHECK(is_probability(model.word_probability(w)));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(ProbModel({Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(ProbModel({make_rational(1, 2), make_rational(1, 3)}), std::domain_error);
  CHECK_THROWS_AS(ProbModel({make_rational(3, 2), make_rational(-1, 2)}), std::domain_error);
  CHECK_THROWS_AS(ProbModel::binary(make_rational(3, 2)), std::domain_error);
}
