#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "bour/core/calculus.hpp"
#include "bour/core/polynomial.hpp"

namespace bour {

inline void require_real(const Polynomial& p, const char* op) {
  if (!p.is_real()) throw InputError(std::string(op) + " requires real coefficients");
}

/// Positive rational c such that p / c has coprime integer coefficients.
inline ExactRational rational_content(const Polynomial& p) {
  require_real(p, "rational_content");
  BigInt g = 0, l = 1;
  for (const auto& t : p.terms()) {
    const ExactRational& c = t.coefficient.re();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (g == 0) return ExactRational(1);
  return make_rational(g, l);
}

/// Canonical scalar representative: coprime integer coefficients and a
/// positive leading coefficient under `order`. Zero maps to zero.
inline Polynomial normalize_primitive_integer(const Polynomial& p,
                                              const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (p.is_zero()) return p;
  ExactRational c = rational_content(p);
  if (sgn(leading_term(p, order).coefficient.re()) < 0) c = -c;
  return p.divided(GaussianRational(c));
}

/// a / b when b divides a in Q(i)[vars]; DivisionError otherwise.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_same_registry(a, b);
  if (b.is_zero()) throw DivisionError("division by the zero polynomial");
  if (b.is_constant()) return a.divided(b.terms()[0].coefficient);
  const auto& lead = b.terms()[0];  // lex leading term
  std::vector<Polynomial::Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const auto& rt = r.terms()[0];
    if (!lead.monomial.divides(rt.monomial)) throw DivisionError("polynomial division is not exact");
    Monomial m = lead.monomial.cofactor_in(rt.monomial);
    GaussianRational c = rt.coefficient / lead.coefficient;
    r = r - b.times_term(m, c);
    quotient.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(a.registry(), std::move(quotient));
}

namespace detail {

inline Polynomial content_in(const Polynomial& p, std::size_t var);
inline Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

inline Polynomial lead_coefficient_in(const Polynomial& p, std::size_t var) {
  return coefficients_in(p, var).back();
}

/// lc(b)^(deg a - deg b + 1) * a mod b, with a and b viewed in var.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  Polynomial r = a;
  const Polynomial lcb = lead_coefficient_in(b, var);
  int e = static_cast<int>(a.degree_in(var)) - static_cast<int>(db) + 1;
  const VariableRegistry& reg = a.registry();
  while (!r.is_zero() && r.degree_in(var) >= db) {
    unsigned dr = r.degree_in(var);
    Polynomial s = lead_coefficient_in(r, var) * Polynomial::variable(reg, reg.name(var), dr - db);
    r = lcb * r - s * b;
    --e;
  }
  if (e > 0) r = lcb.pow(static_cast<unsigned>(e)) * r;
  return r;
}

inline Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
  return exact_divide(p, content_in(p, var));
}

/// gcd of two polynomials primitive in var, by the subresultant PRS.
inline Polynomial subresultant_gcd(Polynomial a, Polynomial b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  const VariableRegistry& reg = a.registry();
  Polynomial g(reg, GaussianRational(1));
  Polynomial h(reg, GaussianRational(1));
  while (true) {
    const unsigned d = a.degree_in(var) - b.degree_in(var);
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return Polynomial(reg, GaussianRational(1));
    a = std::move(b);
    b = exact_divide(r, g * h.pow(d));
    g = lead_coefficient_in(a, var);
    if (d != 0) h = exact_divide(g.pow(d), h.pow(d - 1));
  }
  return primitive_part_in(b, var);
}

inline Polynomial content_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  Polynomial c(p.registry());
  for (auto& coeff : coefficients_in(p, var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? normalize_primitive_integer(coeff, MonomialOrder::lex()) : gcd_impl(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

inline Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder lex = MonomialOrder::lex();
  if (a.is_zero()) return normalize_primitive_integer(b, lex);
  if (b.is_zero()) return normalize_primitive_integer(a, lex);
  const VariableRegistry& reg = a.registry();
  std::size_t best = reg.size();
  unsigned best_degree = std::numeric_limits<unsigned>::max();
  for (std::size_t v = 0; v < reg.size(); ++v) {
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d > 0 && d < best_degree) {
      best = v;
      best_degree = d;
    }
  }
  if (best == reg.size()) return Polynomial(reg, GaussianRational(1));
  if (a.degree_in(best) == 0) return gcd_impl(a, content_in(b, best));
  if (b.degree_in(best) == 0) return gcd_impl(content_in(a, best), b);
  Polynomial ca = content_in(a, best);
  Polynomial cb = content_in(b, best);
  Polynomial g = gcd_impl(ca, cb) * subresultant_gcd(exact_divide(a, ca), exact_divide(b, cb), best);
  return normalize_primitive_integer(g, lex);
}

}  // namespace detail

/// Greatest common divisor over Q, normalized to a primitive integer
/// polynomial with positive lex-leading coefficient.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_same_registry(a, b);
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  require_real(a, "gcd");
  require_real(b, "gcd");
  return detail::gcd_impl(a, b);
}

/// Product of the distinct irreducible factors, normalized as gcd().
/// Factors free of the chosen variable are handled through the content.
inline Polynomial squarefree_part(const Polynomial& p) {
  require_real(p, "squarefree_part");
  if (p.is_zero()) throw InputError("squarefree part of zero");
  const MonomialOrder lex = MonomialOrder::lex();
  auto vars = used_variables(p);
  if (vars.empty()) return Polynomial(p.registry(), GaussianRational(1));
  const std::size_t v = vars.front();
  Polynomial c = detail::content_in(p, v);
  Polynomial pp = exact_divide(p, c);
  Polynomial dp = derivative(pp, p.registry().name(v));
  Polynomial s = exact_divide(pp, detail::gcd_impl(pp, dp));
  return normalize_primitive_integer(squarefree_part(c) * s, lex);
}

struct SquarefreeFactor {
  Polynomial factor;
  unsigned multiplicity;
};

/// Yun's decomposition p = const * prod f_k^k, each f_k squarefree and the
/// f_k pairwise coprime. Content factors are decomposed recursively and
/// merged by multiplicity.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  require_real(p, "squarefree_decomposition");
  if (p.is_zero()) throw InputError("squarefree decomposition of zero");
  const MonomialOrder lex = MonomialOrder::lex();
  auto vars = used_variables(p);
  if (vars.empty()) return {};
  const std::size_t v = vars.front();
  const std::string& name = p.registry().name(v);
  Polynomial c = detail::content_in(p, v);
  Polynomial f = exact_divide(p, c);

  std::vector<SquarefreeFactor> out;
  auto add = [&](Polynomial q, unsigned k) {
    if (q.is_constant()) return;
    q = normalize_primitive_integer(q, lex);
    for (auto& existing : out)
      if (existing.multiplicity == k) {
        existing.factor = normalize_primitive_integer(existing.factor * q, lex);
        return;
      }
    out.push_back({std::move(q), k});
  };

  Polynomial fp = derivative(f, name);
  Polynomial a = detail::gcd_impl(f, fp);
  Polynomial b = exact_divide(f, a);
  Polynomial cc = exact_divide(fp, a);
  Polynomial d = cc - derivative(b, name);
  for (unsigned k = 1; !b.is_constant(); ++k) {
    a = detail::gcd_impl(b, d);
    add(a, k);
    b = exact_divide(b, a);
    cc = exact_divide(d, a);
    d = cc - derivative(b, name);
  }
  for (auto& sf : squarefree_decomposition(c)) add(sf.factor, sf.multiplicity);
  std::sort(out.begin(), out.end(),
            [](const SquarefreeFactor& x, const SquarefreeFactor& y) { return x.multiplicity < y.multiplicity; });
  return out;
}

}  // namespace bour
