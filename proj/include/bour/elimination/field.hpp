#pragma once

#include <cstdint>

#include "bour/core/rational.hpp"

namespace bour::elim {

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t characteristic() const noexcept { return p_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw DivisionError("inverse of zero modulo p");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_integer(const BigInt& z) const {
    return static_cast<Element>(mpz_fdiv_ui(z.get_mpz_t(), p_));
  }
  /// Image of a rational; DivisionError when p divides the denominator.
  Element from_rational(const ExactRational& q) const {
    Element d = from_integer(q.get_den());
    if (d == 0) throw DivisionError("denominator vanishes modulo p");
    return div(from_integer(q.get_num()), d);
  }

 private:
  std::uint32_t p_;
};

/// Q with canonical GMP rationals.
class RationalField {
 public:
  using Element = ExactRational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw DivisionError("inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw DivisionError("division by zero");
    return a / b;
  }
  Element from_rational(const ExactRational& q) const { return q; }
};

}  // namespace bour::elim
