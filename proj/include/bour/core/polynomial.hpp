#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bour/core/error.hpp"
#include "bour/core/gaussian.hpp"
#include "bour/core/monomial.hpp"
#include "bour/core/registry.hpp"

namespace bour {

/// Sparse multivariate polynomial over Q(i) on an explicit variable registry.
/// Terms are stored in strictly descending lex order (registry order) with no
/// zero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    GaussianRational coefficient;
  };

  Polynomial() = default;
  explicit Polynomial(VariableRegistry registry) : registry_(std::move(registry)) {}
  Polynomial(VariableRegistry registry, const GaussianRational& constant)
      : registry_(std::move(registry)) {
    if (!constant.is_zero()) terms_.push_back({Monomial(registry_.size()), constant});
  }

  static Polynomial variable(const VariableRegistry& registry, std::string_view name,
                             unsigned power = 1) {
    return monomial(registry, Monomial::variable(registry.size(), registry.require(name), power));
  }

  static Polynomial monomial(const VariableRegistry& registry, const Monomial& m,
                             const GaussianRational& c = GaussianRational(1)) {
    if (m.size() != registry.size()) throw InputError("monomial arity does not match registry");
    Polynomial p(registry);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from terms in any order, merging duplicates and dropping zeros.
  static Polynomial from_terms(const VariableRegistry& registry, std::vector<Term> terms) {
    for (const auto& t : terms)
      if (t.monomial.size() != registry.size())
        throw InputError("monomial arity does not match registry");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return b.monomial < a.monomial; });
    Polynomial p(registry);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const VariableRegistry& registry() const noexcept { return registry_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  bool is_real() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coefficient.is_real(); });
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.total_degree()));
    return d;
  }

  unsigned degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[index]);
    return d;
  }
  unsigned degree_in(std::string_view name) const { return degree_in(registry_.require(name)); }
  bool depends_on(std::size_t index) const { return degree_in(index) > 0; }

  GaussianRational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return key < t.monomial; });
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return {};
  }
  GaussianRational constant_term() const { return coefficient(Monomial(registry_.size())); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_registry(a, b);
    return merge(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_registry(a, b);
    return merge(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_registry(a, b);
    return multiply(a, b);
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const GaussianRational& c, const Polynomial& p) { return p.scaled(c); }
  friend Polynomial operator*(const Polynomial& p, const GaussianRational& c) { return p.scaled(c); }

  Polynomial scaled(const GaussianRational& c) const {
    if (c.is_zero()) return Polynomial(registry_);
    Polynomial r = *this;
    if (c.is_one()) return r;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }

  /// Exact division of every coefficient by a nonzero scalar.
  Polynomial divided(const GaussianRational& c) const {
    if (c.is_zero()) throw DivisionError("polynomial divided by zero scalar");
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient /= c;
    return r;
  }

  /// c * m * this; multiplication by a monomial preserves lex order.
  Polynomial times_term(const Monomial& m, const GaussianRational& c) const {
    Polynomial r(registry_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result(registry_, GaussianRational(1));
    Polynomial base = *this;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  Polynomial conj() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = t.coefficient.conj();
    return r;
  }

  /// Polynomial formed by the real (resp. imaginary) parts of the coefficients.
  Polynomial real_part() const { return component(false); }
  Polynomial imag_part() const { return component(true); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.registry_ == b.registry_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !(a.terms_[i].coefficient == b.terms_[i].coefficient))
        return false;
    return true;
  }

  static void check_same_registry(const Polynomial& a, const Polynomial& b) {
    if (!(a.registry_ == b.registry_))
      throw InputError("registry mismatch: [" + a.registry_.joined() + "] vs [" +
                       b.registry_.joined() + "]");
  }

 private:
  Polynomial component(bool imaginary) const {
    Polynomial r(registry_);
    for (const auto& t : terms_) {
      const ExactRational& c = imaginary ? t.coefficient.im() : t.coefficient.re();
      if (sgn(c) != 0) r.terms_.push_back({t.monomial, GaussianRational(c)});
    }
    return r;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r(a.registry_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && b.terms_[j].monomial < a.terms_[i].monomial)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || a.terms_[i].monomial < b.terms_[j].monomial) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coefficient = -r.terms_.back().coefficient;
      } else {
        GaussianRational c = a.terms_[i].coefficient;
        if (subtract) c -= b.terms_[j].coefficient;
        else c += b.terms_[j].coefficient;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.registry_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    std::vector<Polynomial> rows;
    rows.reserve(small.size());
    for (const auto& t : small.terms_) rows.push_back(large.times_term(t.monomial, t.coefficient));
    while (rows.size() > 1) {
      std::vector<Polynomial> next;
      next.reserve((rows.size() + 1) / 2);
      for (std::size_t k = 0; k + 1 < rows.size(); k += 2) next.push_back(merge(rows[k], rows[k + 1], false));
      if (rows.size() % 2) next.push_back(std::move(rows.back()));
      rows = std::move(next);
    }
    return std::move(rows.front());
  }

  VariableRegistry registry_;
  std::vector<Term> terms_;
};

using PolyVec3 = std::array<Polynomial, 3>;

inline Polynomial dot(const PolyVec3& a, const PolyVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline PolyVec3 cross(const PolyVec3& a, const PolyVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace bour
