#pragma once

// Buchberger's algorithm over a generic coefficient field, on packed
// monomials whose order is encoded as an integer key (weight-matrix rows).
// Polynomials are ascending term vectors: the leading term is back().

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stop_token>
#include <utility>
#include <vector>

#include "bour/core/error.hpp"
#include "bour/core/monomial.hpp"
#include "bour/elimination/field.hpp"

namespace bour::elim {

struct EngineMonomial {
  std::array<std::int16_t, kMaxVariables> key{};
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t mask = 0;
  std::uint32_t degree = 0;
};

inline int compare_keys(const EngineMonomial& a, const EngineMonomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.key[i] != b.key[i]) return a.key[i] < b.key[i] ? -1 : 1;
  return 0;
}

inline bool divides(const EngineMonomial& a, const EngineMonomial& b) noexcept {
  if (a.mask & ~b.mask) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

inline bool same_exponents(const EngineMonomial& a, const EngineMonomial& b) noexcept { return a.exp == b.exp; }

inline bool coprime(const EngineMonomial& a, const EngineMonomial& b) noexcept { return (a.mask & b.mask) == 0; }

/// Packs monomials for one MonomialOrder and registry size.
class KeyedOrder {
 public:
  KeyedOrder(const MonomialOrder& order, std::size_t nvars) : order_(order), nvars_(nvars) {
    if (nvars > kMaxVariables) throw InputError("too many variables for the elimination engine");
    auto rows = order.weight_rows(nvars);
    if (rows.size() > kMaxVariables) throw InputError("monomial order has too many weight rows");
    rows_.assign(rows.size(), {});
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t i = 0; i < nvars; ++i) rows_[r][i] = static_cast<std::int8_t>(rows[r][i]);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }

  EngineMonomial pack(const Monomial& m) const {
    EngineMonomial e;
    for (std::size_t i = 0; i < nvars_; ++i) e.exp[i] = static_cast<std::uint16_t>(m[i]);
    finish(e);
    return e;
  }

  Monomial unpack(const EngineMonomial& e) const {
    Monomial m(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) m.set(i, e.exp[i]);
    return m;
  }

  EngineMonomial multiply(const EngineMonomial& a, const EngineMonomial& b) const {
    EngineMonomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
      r.key[i] = static_cast<std::int16_t>(a.key[i] + b.key[i]);
    }
    r.mask = a.mask | b.mask;
    r.degree = a.degree + b.degree;
    if (r.degree > Monomial::kMaxExponent) throw InputError("monomial degree overflow in elimination");
    return r;
  }

  EngineMonomial lcm(const EngineMonomial& a, const EngineMonomial& b) const {
    EngineMonomial r;
    for (std::size_t i = 0; i < nvars_; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    finish(r);
    return r;
  }

  /// b / a for a dividing b.
  EngineMonomial quotient(const EngineMonomial& b, const EngineMonomial& a) const {
    EngineMonomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
      r.key[i] = static_cast<std::int16_t>(b.key[i] - a.key[i]);
      if (r.exp[i]) r.mask |= 1u << i;
    }
    r.degree = b.degree - a.degree;
    return r;
  }

 private:
  void finish(EngineMonomial& e) const {
    e.mask = 0;
    e.degree = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      e.degree += e.exp[i];
      if (e.exp[i]) e.mask |= 1u << i;
    }
    if (e.degree > Monomial::kMaxExponent) throw InputError("monomial degree overflow in elimination");
    e.key.fill(0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int s = 0;
      for (std::size_t i = 0; i < nvars_; ++i) s += rows_[r][i] * static_cast<int>(e.exp[i]);
      e.key[r] = static_cast<std::int16_t>(s);
    }
  }

  MonomialOrder order_;
  std::size_t nvars_;
  std::vector<std::array<std::int8_t, kMaxVariables>> rows_;
};

template <class Field>
struct EngineTerm {
  EngineMonomial mono;
  typename Field::Element coeff;
};

template <class Field>
using EnginePoly = std::vector<EngineTerm<Field>>;

/// Ascending merge of a and b, combining equal monomials.
template <class Field>
EnginePoly<Field> merge_add(const Field& field, EnginePoly<Field>&& a, EnginePoly<Field>&& b) {
  if (a.empty()) return std::move(b);
  if (b.empty()) return std::move(a);
  EnginePoly<Field> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare_keys(a[i].mono, b[j].mono);
    if (c < 0) {
      out.push_back(std::move(a[i++]));
    } else if (c > 0) {
      out.push_back(std::move(b[j++]));
    } else {
      auto s = field.add(a[i].coeff, b[j].coeff);
      if (!field.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

/// c * m * (p without its top `skip` terms), ascending.
template <class Field>
EnginePoly<Field> scaled_shift(const Field& field, const KeyedOrder& order, const EnginePoly<Field>& p,
                               std::size_t skip, const EngineMonomial& m,
                               const typename Field::Element& c) {
  EnginePoly<Field> out;
  const std::size_t n = p.size() - std::min(skip, p.size());
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back({order.multiply(p[k].mono, m), field.mul(p[k].coeff, c)});
  return out;
}

/// Sum of sparse polynomials in geometrically sized buckets; the leading
/// term is extracted lazily.
template <class Field>
class Geobucket {
 public:
  explicit Geobucket(const Field& field) : field_(&field) {}

  void add(EnginePoly<Field>&& p) {
    if (p.empty()) return;
    std::size_t i = 0;
    while (capacity(i) < p.size()) ++i;
    while (true) {
      if (buckets_.size() <= i) buckets_.resize(i + 1);
      buckets_[i] = merge_add(*field_, std::move(buckets_[i]), std::move(p));
      if (buckets_[i].size() <= capacity(i)) return;
      p = std::move(buckets_[i]);
      buckets_[i].clear();
      ++i;
    }
  }

  bool pop_leading(EngineTerm<Field>& out) {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || compare_keys(buckets_[i].back().mono, buckets_[best].back().mono) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      out = std::move(buckets_[best].back());
      buckets_[best].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (compare_keys(buckets_[i].back().mono, out.mono) == 0) {
          out.coeff = field_->add(out.coeff, buckets_[i].back().coeff);
          buckets_[i].pop_back();
        }
      }
      if (!field_->is_zero(out.coeff)) return true;
    }
  }

  EnginePoly<Field> drain() {
    EnginePoly<Field> out;
    for (auto& b : buckets_) out = merge_add(*field_, std::move(out), std::move(b));
    buckets_.clear();
    return out;
  }

 private:
  static std::size_t capacity(std::size_t i) { return std::size_t{8} << (2 * i); }

  const Field* field_;
  std::vector<EnginePoly<Field>> buckets_;
};

inline void normalize_coefficients(const PrimeField& field, EnginePoly<PrimeField>& p) {
  if (p.empty()) return;
  auto inv = field.inv(p.back().coeff);
  for (auto& t : p) t.coeff = field.mul(t.coeff, inv);
}

/// Primitive integer content with positive leading coefficient.
inline void normalize_coefficients(const RationalField&, EnginePoly<RationalField>& p) {
  if (p.empty()) return;
  BigInt g = 0, l = 1;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  ExactRational scale(l, g);
  scale.canonicalize();
  if (sgn(p.back().coeff) < 0) scale = -scale;
  if (scale == 1) return;
  for (auto& t : p) t.coeff *= scale;
}

template <class Field>
void make_monic(const Field& field, EnginePoly<Field>& p) {
  if (p.empty()) return;
  auto inv = field.inv(p.back().coeff);
  for (auto& t : p) t.coeff = field.mul(t.coeff, inv);
}

struct Budget {
  std::size_t max_pairs = 0;   ///< 0 means unlimited
  unsigned max_degree = 0;     ///< 0 means unlimited
  double max_seconds = 0.0;    ///< 0 means unlimited
  std::stop_token stop;
};

/// Reduces the polynomial held in `bucket` modulo `basis`. With `full`
/// every term is reduced, otherwise only the leading one (top reduction).
template <class Field>
EnginePoly<Field> reduce_bucket(const Field& field, const KeyedOrder& order, Geobucket<Field>& bucket,
                                const std::vector<const EnginePoly<Field>*>& basis, bool full) {
  EnginePoly<Field> result;  // descending while collecting
  EngineTerm<Field> lt;
  while (bucket.pop_leading(lt)) {
    const EnginePoly<Field>* divisor = nullptr;
    for (const auto* g : basis)
      if (divides(g->back().mono, lt.mono)) {
        divisor = g;
        break;
      }
    if (!divisor) {
      result.push_back(std::move(lt));
      if (!full) {
        EnginePoly<Field> rest = bucket.drain();
        std::reverse(result.begin(), result.end());
        return merge_add(field, std::move(rest), std::move(result));
      }
      continue;
    }
    EngineMonomial m = order.quotient(lt.mono, divisor->back().mono);
    auto c = field.neg(field.div(lt.coeff, divisor->back().coeff));
    bucket.add(scaled_shift(field, order, *divisor, 1, m, c));
  }
  std::reverse(result.begin(), result.end());
  return result;
}

template <class Field>
EnginePoly<Field> reduce(const Field& field, const KeyedOrder& order, EnginePoly<Field> p,
                         const std::vector<const EnginePoly<Field>*>& basis, bool full = true) {
  Geobucket<Field> bucket(field);
  bucket.add(std::move(p));
  return reduce_bucket(field, order, bucket, basis, full);
}

/// Buchberger with the normal selection strategy (smallest lcm degree, ties
/// by the term order, then by pair indices) and the Gebauer-Moeller criteria.
/// The output is the reduced basis, monic, sorted by descending leading term.
template <class Field>
class Buchberger {
 public:
  Buchberger(Field field, KeyedOrder order, Budget budget = {})
      : field_(std::move(field)), order_(std::move(order)), budget_(std::move(budget)) {}

  std::vector<EnginePoly<Field>> run(std::vector<EnginePoly<Field>> generators) {
    start_ = std::chrono::steady_clock::now();
    for (auto& g : generators) {
      if (g.empty()) continue;
      EnginePoly<Field> h = reduce(field_, order_, std::move(g), active_basis(), true);
      if (h.empty()) continue;
      normalize_coefficients(field_, h);
      add_element(std::move(h));
    }
    while (!pairs_.empty()) {
      check_budget();
      Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_processed;
      EnginePoly<Field> h = s_polynomial_reduced(pair);
      if (h.empty()) continue;
      normalize_coefficients(field_, h);
      add_element(std::move(h));
    }
    stats_.pairs_pending = 0;
    stats_.elapsed_seconds = elapsed();
    return reduced_basis();
  }

  const EliminationStats& stats() const noexcept { return stats_; }

 private:
  struct Element {
    EnginePoly<Field> poly;
    bool active = true;
  };
  struct Pair {
    std::size_t i, j;
    EngineMonomial lcm;
  };
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.degree != b.lcm.degree) return a.lcm.degree < b.lcm.degree;
      if (int c = compare_keys(a.lcm, b.lcm)) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void check_budget() {
    stats_.pairs_pending = pairs_.size();
    stats_.basis_size = elements_.size();
    stats_.elapsed_seconds = elapsed();
    if (budget_.stop.stop_requested()) throw BudgetExceeded("elimination cancelled", stats_);
    if (budget_.max_pairs && stats_.pairs_processed >= budget_.max_pairs)
      throw BudgetExceeded("S-pair budget exceeded", stats_);
    if (budget_.max_seconds > 0 && stats_.elapsed_seconds > budget_.max_seconds)
      throw BudgetExceeded("time budget exceeded", stats_);
    if (budget_.max_degree && pairs_.begin()->lcm.degree > budget_.max_degree)
      throw BudgetExceeded("degree budget exceeded", stats_);
  }

  std::vector<const EnginePoly<Field>*> active_basis() const {
    std::vector<const EnginePoly<Field>*> basis;
    for (const auto& e : elements_)
      if (e.active) basis.push_back(&e.poly);
    return basis;
  }

  EnginePoly<Field> s_polynomial_reduced(const Pair& pair) {
    const auto& f = elements_[pair.i].poly;
    const auto& g = elements_[pair.j].poly;
    Geobucket<Field> bucket(field_);
    bucket.add(scaled_shift(field_, order_, f, 1, order_.quotient(pair.lcm, f.back().mono),
                            field_.inv(f.back().coeff)));
    bucket.add(scaled_shift(field_, order_, g, 1, order_.quotient(pair.lcm, g.back().mono),
                            field_.neg(field_.inv(g.back().coeff))));
    return reduce_bucket(field_, order_, bucket, active_basis(), true);
  }

  void add_element(EnginePoly<Field> h) {
    const std::size_t hi = elements_.size();
    stats_.max_degree = std::max<unsigned>(stats_.max_degree, h.back().mono.degree);
    const EngineMonomial lead_h = h.back().mono;
    elements_.push_back({std::move(h), true});

    // Gebauer-Moeller: new pairs (g, h)
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (elements_[g].active) candidates.push_back({g, hi, order_.lcm(elements_[g].poly.back().mono, lead_h)});
    std::vector<char> keep(candidates.size(), 0);
    std::vector<char> dropped(candidates.size(), 0);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const EngineMonomial lead_g = elements_[candidates[a].i].poly.back().mono;
      if (coprime(lead_g, lead_h)) {
        keep[a] = 1;
        continue;
      }
      bool redundant = false;
      for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
        if (b == a || dropped[b]) continue;
        if (b < a && !keep[b]) continue;  // already discarded
        if (divides(candidates[b].lcm, candidates[a].lcm)) redundant = true;
      }
      if (redundant) dropped[a] = 1;
      else keep[a] = 1;
    }

    // old pairs made redundant by h
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const EngineMonomial li = order_.lcm(elements_[it->i].poly.back().mono, lead_h);
      const EngineMonomial lj = order_.lcm(elements_[it->j].poly.back().mono, lead_h);
      if (divides(lead_h, it->lcm) && !same_exponents(li, it->lcm) && !same_exponents(lj, it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(elements_[candidates[a].i].poly.back().mono, lead_h)) continue;
      pairs_.insert(candidates[a]);
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (elements_[g].active && divides(lead_h, elements_[g].poly.back().mono)) elements_[g].active = false;
  }

  std::vector<EnginePoly<Field>> reduced_basis() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < elements_.size(); ++k)
      if (elements_[k].active) idx.push_back(k);
    std::vector<EnginePoly<Field>> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) {
      std::vector<const EnginePoly<Field>*> others;
      for (std::size_t o : idx)
        if (o != k) others.push_back(&elements_[o].poly);
      EnginePoly<Field> r = reduce(field_, order_, elements_[k].poly, others, true);
      make_monic(field_, r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const EnginePoly<Field>& a, const EnginePoly<Field>& b) {
      return compare_keys(a.back().mono, b.back().mono) > 0;
    });
    return out;
  }

  Field field_;
  KeyedOrder order_;
  Budget budget_;
  std::vector<Element> elements_;
  std::set<Pair, PairLess> pairs_;
  EliminationStats stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace bour::elim
