#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bour/core/calculus.hpp"
#include "bour/core/gcd.hpp"
#include "bour/core/polynomial.hpp"
#include "bour/elimination/groebner_engine.hpp"

namespace bour::elim {

/// Finitely generated ideal of real polynomials with a term order attached.
class Ideal {
 public:
  Ideal(std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder::grevlex())
      : generators_(std::move(generators)), order_(std::move(order)) {
    if (generators_.empty()) throw InputError("an ideal needs at least one generator");
    for (const auto& g : generators_) {
      Polynomial::check_same_registry(generators_.front(), g);
      if (g.is_zero()) throw InputError("ideal generators must be nonzero");
      require_real(g, "Ideal");
    }
  }

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const VariableRegistry& registry() const noexcept { return generators_.front().registry(); }
  const MonomialOrder& order() const noexcept { return order_; }

  Ideal with_order(MonomialOrder order) const { return Ideal(generators_, std::move(order)); }

 private:
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;  ///< monic, descending by leading term
  MonomialOrder order;
  EliminationStats stats;
};

template <class Field>
EnginePoly<Field> to_engine(const Polynomial& p, const KeyedOrder& order, const Field& field) {
  require_real(p, "elimination");
  EnginePoly<Field> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto c = field.from_rational(t.coefficient.re());
    if (!field.is_zero(c)) out.push_back({order.pack(t.monomial), std::move(c)});
  }
  std::sort(out.begin(), out.end(), [](const EngineTerm<Field>& a, const EngineTerm<Field>& b) {
    return compare_keys(a.mono, b.mono) < 0;
  });
  return out;
}

inline Polynomial from_engine(const EnginePoly<RationalField>& p, const KeyedOrder& order,
                              const VariableRegistry& registry) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({order.unpack(t.mono), GaussianRational(t.coeff)});
  return Polynomial::from_terms(registry, std::move(terms));
}

/// Remainder of p modulo `basis` with every term reduced. If `basis` is a
/// Groebner basis the result is the unique normal form. Complex
/// coefficients of p are reduced part by part.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order) {
  for (const auto& g : basis) {
    Polynomial::check_same_registry(p, g);
    require_real(g, "normal_form basis");
  }
  if (!p.is_real())
    return normal_form(p.real_part(), basis, order) +
           normal_form(p.imag_part(), basis, order).scaled(GaussianRational::i());
  RationalField field;
  KeyedOrder keyed(order, p.registry().size());
  std::vector<EnginePoly<RationalField>> engine_basis;
  for (const auto& g : basis)
    if (!g.is_zero()) engine_basis.push_back(to_engine(g, keyed, field));
  std::vector<const EnginePoly<RationalField>*> ptrs;
  for (const auto& g : engine_basis) ptrs.push_back(&g);
  return from_engine(reduce(field, keyed, to_engine(p, keyed, field), ptrs, true), keyed, p.registry());
}

/// Reduced Groebner basis over Q. Canonical for the ideal and order.
inline GroebnerBasis buchberger_reduced(const Ideal& ideal, const Budget& budget = {}) {
  RationalField field;
  KeyedOrder keyed(ideal.order(), ideal.registry().size());
  std::vector<EnginePoly<RationalField>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_engine(g, keyed, field));
  Buchberger<RationalField> engine(field, keyed, budget);
  auto basis = engine.run(std::move(gens));
  GroebnerBasis out{{}, ideal.order(), engine.stats()};
  for (const auto& b : basis) out.elements.push_back(from_engine(b, keyed, ideal.registry()));
  return out;
}

/// Block order with `names` in the outer block and `inner` inside each block.
inline MonomialOrder elimination_order(const VariableRegistry& registry, const std::vector<std::string>& names,
                                       MonomialOrder::Kind inner = MonomialOrder::Kind::grevlex) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(registry.require(n));
  return MonomialOrder::block(std::move(idx), inner);
}

inline bool free_of(const Polynomial& p, const std::vector<std::size_t>& vars) {
  for (std::size_t v : vars)
    if (p.depends_on(v)) return false;
  return true;
}

/// Generators of the elimination ideal I ∩ Q[remaining variables], as
/// primitive integer polynomials (still over the full registry).
inline std::vector<Polynomial> eliminate(const Ideal& ideal, const std::vector<std::string>& elim_vars,
                                         const Budget& budget = {}) {
  MonomialOrder order = elimination_order(ideal.registry(), elim_vars);
  GroebnerBasis gb = buchberger_reduced(ideal.with_order(order), budget);
  std::vector<std::size_t> idx(order.elimination_indices().begin(), order.elimination_indices().end());
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements)
    if (free_of(g, idx)) out.push_back(normalize_primitive_integer(g, order));
  return out;
}

/// Rabinowitsch trick: appends a fresh variable t (last in the registry) and
/// the generator t*f - 1. Eliminating t afterwards yields I : f^infinity.
inline Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw InputError("cannot saturate by the zero polynomial");
  Polynomial::check_same_registry(ideal.generators().front(), f);
  const VariableRegistry& reg = ideal.registry();
  VariableRegistry extended = reg.with_appended(reg.fresh_name("t"));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, extended));
  Polynomial t = Polynomial::variable(extended, extended.names().back());
  gens.push_back(t * embed(f, extended) - Polynomial(extended, GaussianRational(1)));
  return Ideal(std::move(gens), ideal.order());
}

}  // namespace bour::elim
