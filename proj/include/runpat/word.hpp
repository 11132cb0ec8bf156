// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "runpat/rational.hpp"

namespace runpat {

using Symbol = int;

// Nonempty sequence of small-integer symbols. Textual alphabets are mapped to
// integers at the CLI boundary ('0'..'9' -> 0..9).
class Word {
 public:
  explicit Word(std::vector<Symbol> symbols);
  static Word parse(std::string_view text);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

// i.i.d. model over symbols 0..size-1 with exact rational probabilities.
class ProbModel {
 public:
  explicit ProbModel(std::vector<Rational> probs);
  static ProbModel binary(const Rational& p0);  // P(0)=p0, P(1)=1-p0

  std::size_t alphabet_size() const { return probs_.size(); }
  const Rational& prob(Symbol a) const;
  Rational word_probability(const Word& w) const;  // Π P(a_i)

 private:
  std::vector<Rational> probs_;
};

// Longest-proper-border array (failure function); border[i] is the length of
// the longest proper border of the prefix of length i+1.
std::vector<std::size_t> border_array(const Word& w);

// True iff no nonempty proper suffix of w equals a prefix of w, i.e. w has no
// nontrivial border. Equivalent to: no string shorter than 2|w| contains two
// occurrences of w.
bool is_self_nonoverlapping(const Word& w);

// True iff some suffix of x of length l, lo <= l <= hi, equals the prefix of
// y of the same length.
bool has_suffix_prefix_match(const Word& x, const Word& y, std::size_t lo, std::size_t hi);

// 0-based positions at which pattern occurs inside text.
std::vector<std::size_t> occurrence_positions(const Word& pattern, const Word& text);
bool occurs_in(const Word& pattern, const Word& text);

// Pairwise/self nonoverlap for a word set: every word self-nonoverlapping and
// for every pair, no nonempty suffix of one is a prefix of the other (both
// orders) and neither occurs inside the other. Empty input is an error.
bool is_nonoverlapping_set(const std::vector<Word>& words);

// Human-readable description of the first violation, or nullopt if the set is
// nonoverlapping. Same precondition as is_nonoverlapping_set.
std::optional<std::string> find_overlap_violation(const std::vector<Word>& words);

// Chain admissibility for the weighted-occurrence statistics:
//   (a) w_1 ⊏ w_2 ⊏ … strictly by proper prefix,
//   (b) every w_i is self-nonoverlapping,
//   (c) no nonempty proper suffix of any w_i is a prefix of any w_j,
//   (d) for i <= j, w_i occurs inside w_j only as its prefix.
// Every run chain 1 0^{m_1}, …, 1 0^{m_h} with m_1 < … < m_h qualifies.
bool validate_increasing_chain(const std::vector<Word>& words);
std::optional<std::string> find_chain_violation(const std::vector<Word>& words);

class IncreasingChain {
 public:
  explicit IncreasingChain(std::vector<Word> words);  // throws if invalid

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  std::vector<long long> lengths() const;

 private:
  std::vector<Word> words_;
};

// The chain 1 0^{m_1} ⊏ … ⊏ 1 0^{m_h}; m_list must be strictly increasing,
// entries >= 1.
IncreasingChain run_chain(const std::vector<long long>& m_list);
Word run_word(long long m);  // 1 followed by m zeros

}  // namespace runpat
