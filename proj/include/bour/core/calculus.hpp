#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bour/core/polynomial.hpp"

namespace bour {

/// Formal partial derivative.
inline Polynomial derivative(const Polynomial& p, std::string_view var) {
  const std::size_t k = p.registry().require(var);
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial[k];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(k, e - 1);
    out.push_back({m, t.coefficient * GaussianRational(static_cast<long>(e))});
  }
  return Polynomial::from_terms(p.registry(), std::move(out));
}

/// Formal antiderivative with zero constant of integration.
inline Polynomial antiderivative(const Polynomial& p, std::string_view var) {
  const std::size_t k = p.registry().require(var);
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.monomial[k];
    Monomial m = t.monomial;
    m.set(k, e + 1);
    out.push_back({m, t.coefficient / GaussianRational(static_cast<long>(e + 1))});
  }
  return Polynomial::from_terms(p.registry(), std::move(out));
}

/// Re-expresses p over `target`, matching variables by name.
inline Polynomial embed(const Polynomial& p, const VariableRegistry& target) {
  if (p.registry() == target) return p;
  std::vector<std::size_t> map(p.registry().size());
  std::vector<bool> needed(p.registry().size(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.registry().size(); ++i)
      if (t.monomial[i]) needed[i] = true;
  for (std::size_t i = 0; i < p.registry().size(); ++i) {
    auto idx = target.index_of(p.registry().name(i));
    if (!idx && needed[i])
      throw InputError("variable '" + p.registry().name(i) + "' missing from target registry");
    map[i] = idx.value_or(0);
  }
  std::vector<Polynomial::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < p.registry().size(); ++i)
      if (t.monomial[i]) m.set(map[i], t.monomial[i]);
    out.push_back({m, t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(out));
}

namespace detail {

class HornerSubstitution {
 public:
  HornerSubstitution(const Polynomial& p, std::vector<Polynomial> images, VariableRegistry target)
      : p_(p), images_(std::move(images)), target_(std::move(target)), powers_(images_.size()) {}

  Polynomial run() {
    if (p_.is_zero()) return Polynomial(target_);
    return level(0, p_.size(), 0);
  }

 private:
  const Polynomial& image_power(std::size_t k, unsigned e) {
    auto& cache = powers_[k];
    if (cache.empty()) cache.push_back(Polynomial(target_, GaussianRational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images_[k]);
    return cache[e];
  }

  Polynomial level(std::size_t lo, std::size_t hi, std::size_t k) {
    auto terms = p_.terms();
    if (k == images_.size()) return Polynomial(target_, terms[lo].coefficient);
    Polynomial acc(target_);
    unsigned prev = terms[lo].monomial[k];
    std::size_t i = lo;
    while (i < hi) {
      unsigned e = terms[i].monomial[k];
      std::size_t j = i;
      while (j < hi && terms[j].monomial[k] == e) ++j;
      if (!acc.is_zero() && prev > e) acc = acc * image_power(k, prev - e);
      acc += level(i, j, k + 1);
      prev = e;
      i = j;
    }
    if (prev > 0) acc = acc * image_power(k, prev);
    return acc;
  }

  const Polynomial& p_;
  std::vector<Polynomial> images_;
  VariableRegistry target_;
  std::vector<std::vector<Polynomial>> powers_;
};

}  // namespace detail

/// Exact composition p(var -> image). Unbound variables are kept and must
/// exist in the images' registry. All images share one registry.
inline Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
  const VariableRegistry& source = p.registry();
  VariableRegistry target = source;
  bool have_target = false;
  for (const auto& [name, image] : bindings) {
    source.require(name);
    if (!have_target) {
      target = image.registry();
      have_target = true;
    } else if (!(image.registry() == target)) {
      throw InputError("substitution images live over different registries");
    }
  }
  std::vector<Polynomial> images;
  images.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto it = bindings.find(source.name(i));
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else if (target.contains(source.name(i))) {
      images.push_back(Polynomial::variable(target, source.name(i)));
    } else {
      // unbound and absent from the target: only allowed if p does not use it
      if (p.depends_on(i)) throw InputError("unbound variable '" + source.name(i) + "'");
      images.push_back(Polynomial(target));
    }
  }
  return detail::HornerSubstitution(p, std::move(images), target).run();
}

/// (Re, Im) of p(zeta -> u + i v) for real u, v; p must involve only `zeta`.
inline std::pair<Polynomial, Polynomial> split_real_imag(const Polynomial& p, std::string_view zeta,
                                                        const std::string& u = "u",
                                                        const std::string& v = "v") {
  const std::size_t z = p.registry().require(zeta);
  for (const auto& t : p.terms())
    if (t.monomial.total_degree() != t.monomial[z])
      throw InputError("split_real_imag expects a polynomial in '" + std::string(zeta) + "' only");
  VariableRegistry uv{u, v};
  Polynomial image = Polynomial::variable(uv, u) + Polynomial::variable(uv, v).scaled(GaussianRational::i());
  VariableRegistry zreg{std::string(zeta)};
  std::vector<Polynomial::Term> ts;
  for (const auto& t : p.terms()) ts.push_back({Monomial{t.monomial[z]}, t.coefficient});
  Polynomial univariate = Polynomial::from_terms(zreg, std::move(ts));
  Polynomial full = substitute(univariate, {{std::string(zeta), image}});
  return {full.real_part(), full.imag_part()};
}

/// Exact evaluation at a rational point.
inline GaussianRational eval(const Polynomial& p, std::span<const ExactRational> point) {
  if (point.size() != p.registry().size()) throw InputError("evaluation point arity mismatch");
  GaussianRational sum;
  for (const auto& t : p.terms()) {
    ExactRational prod(1);
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i]) prod *= pow(point[i], t.monomial[i]);
    sum += t.coefficient * GaussianRational(prod);
  }
  return sum;
}

inline GaussianRational eval(const Polynomial& p, std::initializer_list<ExactRational> point) {
  std::vector<ExactRational> v(point);
  return eval(p, std::span<const ExactRational>(v));
}

/// Double precision evaluation; rounding error is not controlled.
inline std::complex<double> eval_complex(const Polynomial& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.registry().size()) throw InputError("evaluation point arity mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& t : p.terms()) {
    std::complex<double> prod(t.coefficient.re().get_d(), t.coefficient.im().get_d());
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) prod *= point[i];
    sum += prod;
  }
  return sum;
}

inline double eval_double(const Polynomial& p, std::span<const double> point) {
  std::vector<std::complex<double>> z(point.begin(), point.end());
  return eval_complex(p, z).real();
}

/// Coefficients c_k with p = sum_k c_k * var^k; each c_k is free of var.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
  std::vector<std::vector<Polynomial::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.registry(), std::move(b)));
  return out;
}

inline Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, const VariableRegistry& reg,
                                    std::size_t var) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms()) {
      Monomial m = t.monomial;
      m.set(var, m[var] + static_cast<unsigned>(k));
      terms.push_back({m, t.coefficient});
    }
  return Polynomial::from_terms(reg, std::move(terms));
}

/// Leading term under `order`; p must be nonzero.
inline const Polynomial::Term& leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw InputError("zero polynomial has no leading term");
  auto terms = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (order.greater(terms[i].monomial, terms[best].monomial)) best = i;
  return terms[best];
}

/// Terms sorted strictly descending in `order`.
inline std::vector<Polynomial::Term> sorted_terms(const Polynomial& p, const MonomialOrder& order) {
  std::vector<Polynomial::Term> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(), [&](const Polynomial::Term& a, const Polynomial::Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return out;
}

/// Registry indices of the variables p actually uses.
inline std::vector<std::size_t> used_variables(const Polynomial& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.registry().size(); ++i)
    if (p.depends_on(i)) out.push_back(i);
  return out;
}

}  // namespace bour
