#pragma once

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bour/core/rational_map.hpp"
#include "bour/elimination/ideal.hpp"
#include "bour/elimination/modular.hpp"
#include "bour/elimination/resultant.hpp"

namespace bour::elim {

enum class ImplicitMethod { groebner, resultant };

inline const char* to_string(ImplicitMethod m) { return m == ImplicitMethod::groebner ? "groebner" : "resultant"; }

inline ImplicitMethod parse_method(std::string_view s) {
  if (s == "groebner") return ImplicitMethod::groebner;
  if (s == "resultant") return ImplicitMethod::resultant;
  throw InputError("unknown method '" + std::string(s) + "' (expected groebner or resultant)");
}

struct ImplicitOptions {
  ImplicitMethod method = ImplicitMethod::groebner;
  bool modular = true;  ///< multi-modular lifting; false runs Buchberger over Q directly
  Budget budget;
  std::size_t max_primes = 96;
  /// Extra polynomial relations among the parameters, e.g. c^2 + s^2 - 1.
  std::vector<Polynomial> relations;
  /// Skip saturation by the denominators (only useful for comparisons).
  bool saturate = true;
};

struct ImplicitResult {
  Polynomial polynomial;  ///< primitive integer, positive grevlex leading coefficient
  int total_degree = 0;
  ImplicitMethod method = ImplicitMethod::groebner;
  double elapsed_seconds = 0.0;
  Polynomial certificate;  ///< cleared substitution residual; zero when certified
  EliminationStats stats;

  /// Sidecar block written next to a .poly file.
  std::string meta_text() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", elapsed_seconds);
    return "degree: " + std::to_string(total_degree) + "\nmethod: " + to_string(method) + "\nelapsed_s: " + buf +
           "\n";
  }
};

/// f(N_1/D_1, ..., N_n/D_n) * prod D_i^deg_i(f), with f over the target
/// variables and the map over the parameters. Reduced modulo `relations`
/// when given. Zero iff the parametrization lies on f = 0.
inline Polynomial substitution_certificate(const Polynomial& f, const RationalMap& map,
                                           const std::vector<std::string>& targets,
                                           const std::vector<Polynomial>& relations = {}) {
  if (targets.size() != map.size()) throw InputError("target count does not match the map");
  const VariableRegistry& params = map.registry();
  std::vector<std::size_t> idx;
  std::vector<unsigned> deg;
  for (const auto& t : targets) {
    idx.push_back(f.registry().require(t));
    deg.push_back(f.degree_in(idx.back()));
  }
  for (std::size_t i = 0; i < f.registry().size(); ++i)
    if (f.depends_on(i) && std::find(idx.begin(), idx.end(), i) == idx.end())
      throw InputError("implicit polynomial uses a non-target variable '" + f.registry().name(i) + "'");

  auto powers = [&](const Polynomial& base, unsigned n) {
    std::vector<Polynomial> out{Polynomial(params, GaussianRational(1))};
    for (unsigned k = 0; k < n; ++k) out.push_back(out.back() * base);
    return out;
  };
  std::vector<std::vector<Polynomial>> num_pow, den_pow;
  for (std::size_t i = 0; i < map.size(); ++i) {
    num_pow.push_back(powers(map[i].numerator(), deg[i]));
    den_pow.push_back(map[i].denominator().is_constant() ? std::vector<Polynomial>{} : powers(map[i].denominator(), deg[i]));
  }
  Polynomial sum(params);
  for (const auto& t : f.terms()) {
    Polynomial term(params, t.coefficient);
    GaussianRational scalar(1);
    for (std::size_t i = 0; i < map.size(); ++i) {
      unsigned e = t.monomial[idx[i]];
      term *= num_pow[i][e];
      if (den_pow[i].empty()) {
        // constant denominator: fold it into a scalar
        const GaussianRational d = map[i].denominator().constant_term();
        for (unsigned k = e; k < deg[i]; ++k) scalar *= d;
      } else {
        term *= den_pow[i][deg[i] - e];
      }
    }
    sum += term.scaled(scalar);
  }
  if (relations.empty() || sum.is_zero()) return sum;
  Ideal rel(relations, MonomialOrder::grevlex());
  return normal_form(sum, buchberger_reduced(rel).elements, MonomialOrder::grevlex());
}

namespace detail {

inline VariableRegistry implicit_registry(const RationalMap& map, const std::vector<std::string>& targets) {
  std::vector<std::string> names(map.registry().names().begin(), map.registry().names().end());
  for (const auto& t : targets) {
    if (map.registry().contains(t)) throw InputError("target variable '" + t + "' clashes with a parameter");
    names.push_back(t);
  }
  return VariableRegistry(std::move(names));
}

inline std::vector<std::string> implicit_strings(const std::vector<Polynomial>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(canonical_text(g));
  return out;
}

inline ImplicitResult implicitize_groebner(const RationalMap& map, const std::vector<std::string>& targets,
                                           const ImplicitOptions& options) {
  const VariableRegistry& params = map.registry();
  VariableRegistry reg = implicit_registry(map, targets);
  VariableRegistry target_reg(targets);

  std::vector<Polynomial> gens;
  std::vector<Polynomial> dens;
  for (std::size_t i = 0; i < map.size(); ++i) {
    Polynomial x = Polynomial::variable(reg, targets[i]);
    gens.push_back(x * embed(map[i].denominator(), reg) - embed(map[i].numerator(), reg));
    const Polynomial& d = map[i].denominator();
    if (!d.is_constant() && std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
  }
  for (const auto& r : options.relations) {
    Polynomial::check_same_registry(r, map[0].numerator());
    gens.push_back(embed(r, reg));
  }

  std::vector<std::string> elim(params.names().begin(), params.names().end());
  Ideal ideal(gens, MonomialOrder::grevlex());
  if (options.saturate && !dens.empty()) {
    Polynomial product(params, GaussianRational(1));
    for (const auto& d : dens) product *= d;
    ideal = saturate(ideal, embed(squarefree_part(product), reg));
    elim.push_back(ideal.registry().names().back());
  }
  ideal = ideal.with_order(elimination_order(ideal.registry(), elim));

  auto certify = [&](const Polynomial& g) {
    return substitution_certificate(embed(g, target_reg), map, targets, options.relations);
  };

  ImplicitResult result;
  std::vector<Polynomial> generators;
  if (options.modular) {
    ModularOptions mo;
    mo.max_primes = options.max_primes;
    mo.budget = options.budget;
    auto accept = [&](const std::vector<Polynomial>& cand) {
      for (const auto& g : cand)
        if (!certify(g).is_zero()) return false;
      return true;
    };
    ModularResult mr = modular_eliminate(ideal, accept, mo);
    generators = std::move(mr.generators);
    result.stats = mr.stats;
  } else {
    GroebnerBasis gb = buchberger_reduced(ideal, options.budget);
    std::vector<std::size_t> idx(ideal.order().elimination_indices().begin(),
                                 ideal.order().elimination_indices().end());
    for (const auto& g : gb.elements)
      if (free_of(g, idx)) generators.push_back(g);
    result.stats = gb.stats;
  }
  std::vector<Polynomial> projected;
  for (const auto& g : generators)
    projected.push_back(normalize_primitive_integer(embed(g, target_reg), MonomialOrder::grevlex()));
  if (projected.empty())
    throw NonPrincipalError({"0 (the image is dense: no implicit equation exists)"});
  if (projected.size() > 1) throw NonPrincipalError(implicit_strings(projected));
  result.polynomial = std::move(projected.front());
  result.certificate = substitution_certificate(result.polynomial, map, targets, options.relations);
  return result;
}

inline ImplicitResult implicitize_resultant(const RationalMap& map, const std::vector<std::string>& targets,
                                            const ImplicitOptions& options) {
  const VariableRegistry& params = map.registry();
  if (params.size() != 1 || map.size() != 2 || !options.relations.empty())
    throw InputError("the resultant method handles plane curves (one parameter, two components) only");
  VariableRegistry reg = implicit_registry(map, targets);
  VariableRegistry target_reg(targets);
  std::vector<Polynomial> eqs;
  for (std::size_t i = 0; i < 2; ++i)
    eqs.push_back(Polynomial::variable(reg, targets[i]) * embed(map[i].denominator(), reg) -
                  embed(map[i].numerator(), reg));
  Polynomial res = resultant(eqs[0], eqs[1], params.name(0));
  if (res.is_zero()) throw InputError("resultant vanishes identically (components share a factor)");
  ImplicitResult result;
  Polynomial kept(target_reg, GaussianRational(1));
  for (const auto& sf : squarefree_decomposition(res)) {
    Polynomial f = embed(sf.factor, target_reg);
    if (substitution_certificate(f, map, targets).is_zero()) kept *= f;
  }
  if (kept.is_constant()) throw InputError("no resultant factor vanishes on the parametrization");
  result.polynomial = normalize_primitive_integer(kept, MonomialOrder::grevlex());
  result.certificate = substitution_certificate(result.polynomial, map, targets);
  return result;
}

}  // namespace detail

/// Implicit equation of the image of `map` in the `targets` coordinates.
/// Surfaces need two parameters and three components, plane curves one and
/// two (more parameters are fine when `relations` cut the dimension down).
inline ImplicitResult implicitize_map(const RationalMap& map, const std::vector<std::string>& targets,
                                      const ImplicitOptions& options = {}) {
  if (map.size() == 0) throw InputError("empty parametrization");
  auto start = std::chrono::steady_clock::now();
  ImplicitResult r = options.method == ImplicitMethod::groebner ? detail::implicitize_groebner(map, targets, options)
                                                                : detail::implicitize_resultant(map, targets, options);
  r.method = options.method;
  r.total_degree = r.polynomial.total_degree();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Plane curve (x(r), z(r)) by resultant, squarefree part and a
/// substitution filter on the factors.
inline ImplicitResult implicitize_profile(const Polynomial& x_of_r, const Polynomial& z_of_r,
                                          const std::vector<std::string>& targets = {"x", "z"}) {
  Polynomial::check_same_registry(x_of_r, z_of_r);
  if (x_of_r.registry().size() != 1) throw InputError("profile parametrization must be univariate");
  if (x_of_r.is_constant() || z_of_r.is_constant())
    throw InputError("profile components must be non-constant");
  ImplicitOptions o;
  o.method = ImplicitMethod::resultant;
  return implicitize_map(RationalMap({RationalFunction(x_of_r), RationalFunction(z_of_r)}), targets, o);
}

}  // namespace bour::elim
