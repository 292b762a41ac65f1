#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "bour/core/error.hpp"

namespace bour {

/// Arbitrary precision rational, always kept canonical (gcd 1, positive denominator).
using ExactRational = mpq_class;
using BigInt = mpz_class;

inline ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

inline ExactRational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const ExactRational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt parse_bigint(std::string_view text) {
  BigInt z;
  std::string s(text);
  if (s.empty() || z.set_str(s, 10) != 0) throw InputError("not an integer: '" + s + "'");
  return z;
}

/// Accepts "n" or "n/d" with an optional leading sign.
inline ExactRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_bigint(text));
  return make_rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

inline ExactRational pow(const ExactRational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  return ExactRational(num, den);
}

}  // namespace bour
