// SPDX-License-Identifier: Apache-2.0
#include "runpat/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace runpat {

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("a word must be nonempty");
}

Word Word::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("word symbols must be digits: '" + std::string(text) + "'");
    symbols.push_back(c - '0');
  }
  return Word(std::move(symbols));
}

std::string Word::str() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Symbol a : symbols_) s += static_cast<char>('0' + a);
  return s;
}

ProbModel::ProbModel(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw std::invalid_argument("a model needs at least 2 symbols");
  Rational sum(0);
  for (const Rational& p : probs_) {
    if (!is_probability(p)) throw std::domain_error("symbol probabilities must lie in [0,1]");
    sum += p;
  }
  if (sum != 1) throw std::domain_error("symbol probabilities must sum to exactly 1");
}

ProbModel ProbModel::binary(const Rational& p0) {
  if (!is_probability(p0)) throw std::domain_error("p must lie in [0,1]");
  return ProbModel({p0, Rational(1) - p0});
}

const Rational& ProbModel::prob(Symbol a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= probs_.size())
    throw std::out_of_range("symbol outside the model alphabet");
  return probs_[static_cast<std::size_t>(a)];
}

Rational ProbModel::word_probability(const Word& w) const {
  Rational p(1);
  for (Symbol a : w.symbols()) p *= prob(a);
  return p;
}

std::vector<std::size_t> border_array(const Word& w) {
  const auto& s = w.symbols();
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1, j = 0; i < s.size();) {
    if (s[i] == s[j]) {
      border[i++] = ++j;
    } else if (j != 0) {
      j = border[j - 1];
    } else {
      border[i++] = 0;
    }
  }
  return border;
}

bool is_self_nonoverlapping(const Word& w) { return border_array(w).back() == 0; }

bool has_suffix_prefix_match(const Word& x, const Word& y, std::size_t lo, std::size_t hi) {
  hi = std::min({hi, x.size(), y.size()});
  for (std::size_t l = std::max<std::size_t>(lo, 1); l <= hi; ++l) {
    bool match = true;
    for (std::size_t i = 0; i < l && match; ++i) match = (x[x.size() - l + i] == y[i]);
    if (match) return true;
  }
  return false;
}

std::vector<std::size_t> occurrence_positions(const Word& pattern, const Word& text) {
  std::vector<std::size_t> positions;
  if (pattern.size() > text.size()) return positions;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j) match = (text[i + j] == pattern[j]);
    if (match) positions.push_back(i);
  }
  return positions;
}

bool occurs_in(const Word& pattern, const Word& text) {
  return !occurrence_positions(pattern, text).empty();
}

std::optional<std::string> find_overlap_violation(const std::vector<Word>& words) {
  if (words.empty()) throw std::invalid_argument("word set must be nonempty");
  std::vector<Word> distinct;
  for (const Word& w : words)
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);

  for (const Word& w : distinct)
    if (!is_self_nonoverlapping(w)) return "word " + w.str() + " overlaps itself";
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const Word& x = distinct[i];
      const Word& y = distinct[j];
      if (has_suffix_prefix_match(x, y, 1, x.size()) ||
          has_suffix_prefix_match(y, x, 1, y.size()) || occurs_in(x, y) || occurs_in(y, x))
        return "words " + x.str() + " and " + y.str() + " overlap";
    }
  }
  return std::nullopt;
}

bool is_nonoverlapping_set(const std::vector<Word>& words) {
  return !find_overlap_violation(words).has_value();
}

std::optional<std::string> find_chain_violation(const std::vector<Word>& words) {
  if (words.empty()) return "chain must be nonempty";
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const Word& a = words[i];
    const Word& b = words[i + 1];
    if (a.size() >= b.size() || !std::equal(a.symbols().begin(), a.symbols().end(), b.symbols().begin()))
      return "word " + a.str() + " is not a proper prefix of " + b.str();
  }
  for (const Word& w : words)
    if (!is_self_nonoverlapping(w)) return "word " + w.str() + " overlaps itself";
  for (const Word& x : words)
    for (const Word& y : words)
      if (x.size() > 1 && has_suffix_prefix_match(x, y, 1, x.size() - 1))
        return "a proper suffix of " + x.str() + " is a prefix of " + y.str();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const auto positions = occurrence_positions(words[i], words[j]);
      if (positions.size() != 1 || positions[0] != 0)
        return "word " + words[i].str() + " occurs inside " + words[j].str() +
               " beyond the prefix position";
    }
  }
  return std::nullopt;
}

bool validate_increasing_chain(const std::vector<Word>& words) {
  if (words.empty()) return false;
  return !find_chain_violation(words).has_value();
}

IncreasingChain::IncreasingChain(std::vector<Word> words) : words_(std::move(words)) {
  if (auto violation = find_chain_violation(words_))
    throw std::invalid_argument("not an increasing nonoverlapping chain: " + *violation);
}

std::vector<long long> IncreasingChain::lengths() const {
  std::vector<long long> out;
  out.reserve(words_.size());
  for (const Word& w : words_) out.push_back(static_cast<long long>(w.size()));
  return out;
}

Word run_word(long long m) {
  if (m < 1) throw std::invalid_argument("run length must be >= 1");
  std::vector<Symbol> symbols(static_cast<std::size_t>(m) + 1, 0);
  symbols[0] = 1;
  return Word(std::move(symbols));
}

IncreasingChain run_chain(const std::vector<long long>& m_list) {
  if (m_list.empty()) throw std::invalid_argument("run chain needs at least one length");
  std::vector<Word> words;
  words.reserve(m_list.size());
  for (std::size_t i = 0; i < m_list.size(); ++i) {
    if (i > 0 && m_list[i] <= m_list[i - 1])
      throw std::invalid_argument("run lengths must be strictly increasing");
    words.push_back(run_word(m_list[i]));
  }
  return IncreasingChain(std::move(words));
}

}  // namespace runpat
