// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace runpat {

using Integer = mpz_class;
using Rational = mpq_class;

// mpz_class lacks a long long constructor; every 64-bit value goes through
// here (long is 64-bit on the supported platforms).
inline Integer make_integer(long long value) { return Integer(static_cast<long>(value)); }

// Every Rational handled by this library is canonical: lowest terms, positive
// denominator. make_rational and parse_rational establish the invariant;
// gmp arithmetic preserves it.
Rational make_rational(Integer num, Integer den);

inline Rational make_rational(long long num, long long den) {
  return make_rational(make_integer(num), make_integer(den));
}

// Accepts "a/b", plain integers, and decimal literals ("0.25" -> 1/4,
// optional e/E exponent). Conversion is exact. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// base^exp with exp possibly negative (base must be nonzero then).
Rational rational_pow(const Rational& base, long long exp);

Integer integer_pow(const Integer& base, unsigned long exp);

// Smallest integer >= value.
Integer ceil_rational(const Rational& value);

bool is_probability(const Rational& value);  // 0 <= value <= 1

// Correctly rounded decimal rendering with `significant` digits, ties to
// even. Fixed-point form for decimal exponents in [-5, 9], scientific
// (d.ddd…e±k) otherwise. Exact zero renders as "0".
std::string decimal_string(const Rational& value, int significant = 7);

}  // namespace runpat
