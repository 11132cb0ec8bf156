// SPDX-License-Identifier: Apache-2.0
#include "runpat/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace runpat {

namespace {

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// sign of (|value| - 10^e)
int cmp_abs_pow10(const Rational& value, long e) {
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  if (e >= 0)
    den *= pow10(static_cast<unsigned long>(e));
  else
    num *= pow10(static_cast<unsigned long>(-e));
  return cmp(num, den);
}

}  // namespace

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
  Rational r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("cannot parse rational from empty string");

  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse rational: '" + s + "'");
  };

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num_s = s.substr(0, slash);
    const std::string den_s = s.substr(slash + 1);
    Integer num, den;
    if (num_s.empty() || den_s.empty() || mpz_set_str(num.get_mpz_t(), num_s.c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), den_s.c_str(), 10) != 0)
      throw bad();
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero: '" + s + "'");
    return make_rational(num, den);
  }

  // decimal literal: [+-] digits [. digits] [eE [+-] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') {
    negative = (s[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool any_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) throw bad();
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      exp_neg = (s[i] == '-');
      ++i;
    }
    if (i == s.size()) throw bad();
    long v = 0;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) throw std::invalid_argument("rational exponent out of range: '" + s + "'");
    }
    exp10 = exp_neg ? -v : v;
  }
  if (i != s.size()) throw bad();

  Integer num;
  if (mpz_set_str(num.get_mpz_t(), digits.empty() ? "0" : digits.c_str(), 10) != 0) throw bad();
  if (negative) num = -num;
  Integer den = 1;
  const long shift = exp10 - frac_digits;
  if (shift >= 0)
    num *= pow10(static_cast<unsigned long>(shift));
  else
    den = pow10(static_cast<unsigned long>(-shift));
  return make_rational(num, den);
}

Rational rational_pow(const Rational& base, long long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("zero base with negative exponent");
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  if (exp < 0) num.swap(den);
  return make_rational(num, den);  // canonical since base was canonical
}

Integer integer_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer ceil_rational(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

bool is_probability(const Rational& value) { return value >= 0 && value <= 1; }

std::string decimal_string(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be >= 1");
  if (value == 0) return "0";

  const bool negative = value < 0;

  // decimal exponent e: 10^e <= |value| < 10^{e+1}
  long e = static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 10));
  while (cmp_abs_pow10(value, e + 1) >= 0) ++e;
  while (cmp_abs_pow10(value, e) < 0) --e;

  // round |value| * 10^{significant-1-e} to an integer, half to even
  const long shift = significant - 1 - e;
  Integer scaled_num = abs(value.get_num());
  Integer scaled_den = value.get_den();
  if (shift >= 0)
    scaled_num *= pow10(static_cast<unsigned long>(shift));
  else
    scaled_den *= pow10(static_cast<unsigned long>(-shift));
  Integer q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  rem *= 2;
  const int c = cmp(rem, scaled_den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == pow10(static_cast<unsigned long>(significant))) {
    q = pow10(static_cast<unsigned long>(significant - 1));
    ++e;
  }

  std::string digits = q.get_str();
  std::string out;
  if (negative) out += '-';
  if (e >= -5 && e <= 9) {
    if (e >= 0) {
      if (e + 1 >= static_cast<long>(digits.size())) {
        out += digits;
        out.append(static_cast<std::size_t>(e + 1 - static_cast<long>(digits.size())), '0');
      } else {
        out += digits.substr(0, static_cast<std::size_t>(e + 1));
        out += '.';
        out += digits.substr(static_cast<std::size_t>(e + 1));
      }
    } else {
      out += "0.";
      out.append(static_cast<std::size_t>(-e - 1), '0');
      out += digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += (e < 0 ? '-' : '+');
    out += std::to_string(e < 0 ? -e : e);
  }
  return out;
}

}  // namespace runpat
