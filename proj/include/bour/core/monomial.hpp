#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bour/core/error.hpp"
#include "bour/core/registry.hpp"

namespace bour {

/// Exponent vector over a registry of at most kMaxVariables names.
/// Unused slots stay zero so the natural array comparison is lex order.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr unsigned kMaxExponent = 30000;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) throw InputError("too many variables for a monomial");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }
  static Monomial from(std::span<const unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
  }

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= size_) throw InputError("monomial index out of range");
    if (e > kMaxExponent) throw InputError("monomial exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    if (degree_ > kMaxExponent) throw InputError("monomial degree overflow");
    exps_[i] = static_cast<Exponent>(e);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) {
      unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
      if (e > kMaxExponent) throw InputError("monomial exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    if (r.degree_ > kMaxExponent) throw InputError("monomial degree overflow");
    return r;
  }

  Monomial pow(unsigned k) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) r.set(i, unsigned{exps_[i]} * k);
    return r;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const {
    Monomial r(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (exps_[i] > other.exps_[i]) throw DivisionError("monomial does not divide");
      r.exps_[i] = static_cast<Exponent>(other.exps_[i] - exps_[i]);
    }
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }
  /// Lex comparison in registry order; used for storage, not for algorithms.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < size_; ++i) h = (h ^ exps_[i]) * 1099511628211ull;
    return h;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
};

/// Term order on monomials of one registry. Block orders put the elimination
/// variables in an outer block ranked with the inner order, then the rest.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, Kind::lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, Kind::grevlex, {}); }
  static MonomialOrder block(std::vector<std::size_t> elimination, Kind inner = Kind::grevlex) {
    if (inner == Kind::block) throw InputError("block order needs lex or grevlex inside");
    std::sort(elimination.begin(), elimination.end());
    elimination.erase(std::unique(elimination.begin(), elimination.end()), elimination.end());
    return MonomialOrder(Kind::block, inner, std::move(elimination));
  }

  Kind kind() const noexcept { return kind_; }
  Kind inner() const noexcept { return inner_; }
  std::span<const std::size_t> elimination_indices() const noexcept { return elim_; }
  bool is_eliminated(std::size_t index) const {
    return std::binary_search(elim_.begin(), elim_.end(), index);
  }

  /// Sign of a - b in this order.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1u);
    if (kind_ != Kind::block) return compare_on(inner_, a, b, all, n);
    if (int c = compare_on(inner_, a, b, mask_ & all, n)) return c;
    return compare_on(inner_, a, b, ~mask_ & all, n);
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Rows of the weight matrix representing this order for n variables:
  /// comparing the integer vectors (row . exponents) lexicographically is
  /// the same as compare().
  std::vector<std::vector<int>> weight_rows(std::size_t n) const {
    std::vector<std::vector<int>> rows;
    if (kind_ != Kind::block) {
      append_rows(rows, inner_, all_indices(n), n);
    } else {
      std::vector<std::size_t> outer, rest;
      split(n, outer, rest);
      append_rows(rows, inner_, outer, n);
      append_rows(rows, inner_, rest, n);
    }
    return rows;
  }

  std::string describe() const {
    auto name = [](Kind k) { return k == Kind::lex ? std::string("lex") : std::string("grevlex"); };
    if (kind_ != Kind::block) return name(kind_);
    std::string s = "block(";
    for (std::size_t i = 0; i < elim_.size(); ++i) s += (i ? "," : "") + std::to_string(elim_[i]);
    return s + ";" + name(inner_) + ")";
  }

 private:
  MonomialOrder(Kind kind, Kind inner, std::vector<std::size_t> elim)
      : kind_(kind), inner_(inner), elim_(std::move(elim)) {
    for (std::size_t i : elim_) {
      if (i >= kMaxVariables) throw InputError("elimination index out of range");
      mask_ |= 1u << i;
    }
  }

  static std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
  }

  void split(std::size_t n, std::vector<std::size_t>& outer, std::vector<std::size_t>& rest) const {
    for (std::size_t i = 0; i < n; ++i) (is_eliminated(i) ? outer : rest).push_back(i);
  }

  static int compare_on(Kind kind, const Monomial& a, const Monomial& b, std::uint32_t mask,
                        std::size_t n) {
    if (kind == Kind::lex) {
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i & 1u) && a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        da += a[i];
        db += b[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = n; i-- > 0;)
      if ((mask >> i & 1u) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  static void append_rows(std::vector<std::vector<int>>& rows, Kind kind,
                          const std::vector<std::size_t>& idx, std::size_t n) {
    if (idx.empty()) return;
    if (kind == Kind::lex) {
      for (std::size_t i : idx) {
        std::vector<int> row(n, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
      }
      return;
    }
    std::vector<int> deg(n, 0);
    for (std::size_t i : idx) deg[i] = 1;
    rows.push_back(std::move(deg));
    for (std::size_t k = idx.size(); k-- > 1;) {
      std::vector<int> row(n, 0);
      row[idx[k]] = -1;
      rows.push_back(std::move(row));
    }
  }

  Kind kind_;
  Kind inner_;
  std::vector<std::size_t> elim_;
  std::uint32_t mask_ = 0;
};

}  // namespace bour
