#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bour/core/calculus.hpp"
#include "bour/core/gcd.hpp"
#include "bour/core/poly_text.hpp"

namespace bour {

/// Quotient of real polynomials kept in lowest terms, with the denominator
/// primitive integer and lex-positive. The representation is canonical.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial numerator)
      : RationalFunction(numerator, Polynomial(numerator.registry(), GaussianRational(1))) {}
  RationalFunction(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    Polynomial::check_same_registry(num_, den_);
    if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
    require_real(num_, "rational function");
    require_real(den_, "rational function");
    reduce();
  }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  const VariableRegistry& registry() const noexcept { return num_.registry(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  GaussianRational eval(std::span<const ExactRational> point) const {
    return bour::eval(num_, point) / bour::eval(den_, point);
  }
  double eval_double(std::span<const double> point) const {
    return bour::eval_double(num_, point) / bour::eval_double(den_, point);
  }

  std::string text(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    if (den_.is_constant() && den_.constant_term().is_one()) return canonical_text(num_, order);
    return "(" + canonical_text(num_, order) + ")/(" + canonical_text(den_, order) + ")";
  }

 private:
  void reduce() {
    const MonomialOrder lex = MonomialOrder::lex();
    if (num_.is_zero()) {
      den_ = Polynomial(den_.registry(), GaussianRational(1));
      return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    Polynomial d = normalize_primitive_integer(den_, lex);
    GaussianRational scale = den_.terms()[0].coefficient / d.terms()[0].coefficient;
    num_ = num_.divided(scale);
    den_ = std::move(d);
  }

  Polynomial num_;
  Polynomial den_;
};

/// Component-wise rational map sharing one registry.
class RationalMap {
 public:
  RationalMap() = default;
  explicit RationalMap(std::vector<RationalFunction> components) : components_(std::move(components)) {
    for (std::size_t i = 1; i < components_.size(); ++i)
      Polynomial::check_same_registry(components_[0].numerator(), components_[i].numerator());
  }

  std::size_t size() const noexcept { return components_.size(); }
  const RationalFunction& operator[](std::size_t i) const { return components_.at(i); }
  std::span<const RationalFunction> components() const noexcept { return components_; }
  const VariableRegistry& registry() const { return components_.at(0).registry(); }

 private:
  std::vector<RationalFunction> components_;
};

}  // namespace bour
