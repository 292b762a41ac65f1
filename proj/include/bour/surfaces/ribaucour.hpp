#pragma once

#include <numeric>
#include <utility>

#include "bour/elimination/ideal.hpp"
#include "bour/surfaces/index.hpp"

namespace bour::surf {

/// Class formula 2q(p + q) for m = p/q in lowest terms.
inline long ribaucour_class(long p, long q) {
  SurfaceIndex::rational(p, q);  // validates
  long cl = 2 * q * (p + q);
  if (cl <= 0) throw InputError("class formula gives no positive value for m = " + std::to_string(p) + "/" +
                                std::to_string(q));
  return cl;
}

/// Degree formula (m + 1)^2 for integer m >= 2.
inline long ribaucour_degree(long m) {
  require_symbolic_m(m);
  return (m + 1) * (m + 1);
}

inline VariableRegistry cs_registry() { return VariableRegistry{"c", "s"}; }

/// (cos k t, sin k t) as polynomials in c = cos t, s = sin t.
inline std::pair<Polynomial, Polynomial> trig_expand(unsigned k) {
  auto reg = cs_registry();
  Polynomial z = Polynomial::variable(reg, "c") + Polynomial::variable(reg, "s").scaled(GaussianRational::i());
  Polynomial p = Polynomial(reg, GaussianRational(1));
  for (unsigned j = 0; j < k; ++j) p *= z;
  return {p.real_part(), p.imag_part()};
}

/// The circle r = r0 of B_m as polynomials in (c, s).
inline PolyVec3 circle_of_radius(long m, const ExactRational& r0) {
  require_symbolic_m(m);
  auto [cm1, sm1] = trig_expand(static_cast<unsigned>(m - 1));
  auto [cp1, sp1] = trig_expand(static_cast<unsigned>(m + 1));
  auto [cm, sm] = trig_expand(static_cast<unsigned>(m));
  (void)sm;
  GaussianRational a(pow(r0, static_cast<unsigned>(m - 1)) / (m - 1));
  GaussianRational b(pow(r0, static_cast<unsigned>(m + 1)) / (m + 1));
  GaussianRational c(pow(r0, static_cast<unsigned>(m)) * make_rational(2, m));
  return {cm1.scaled(a) - cp1.scaled(b), -(sm1.scaled(a) + sp1.scaled(b)), cm.scaled(c)};
}

/// x^2 + y^2 + k z^2 - (r0^(m-1)/(m-1) + r0^(m+1)/(m+1))^2 on the circle
/// r = r0, reduced modulo c^2 + s^2 - 1.
inline Polynomial quadric_residual(long m, const ExactRational& r0, const ExactRational& k) {
  PolyVec3 X = circle_of_radius(m, r0);
  auto reg = cs_registry();
  ExactRational rhs = pow(r0, static_cast<unsigned>(m - 1)) / (m - 1) + pow(r0, static_cast<unsigned>(m + 1)) / (m + 1);
  Polynomial residual = X[0] * X[0] + X[1] * X[1] + (X[2] * X[2]).scaled(GaussianRational(k)) -
                        Polynomial(reg, GaussianRational(rhs * rhs));
  Polynomial c = Polynomial::variable(reg, "c"), s = Polynomial::variable(reg, "s");
  return elim::normal_form(residual, {c * c + s * s - Polynomial(reg, GaussianRational(1))}, MonomialOrder::grevlex());
}

inline ExactRational quadric_coefficient(long m) { return make_rational(m * m, m * m - 1); }

/// Zero iff the circle r = r0 lies on the quadric of revolution.
inline Polynomial quadric_certificate(long m, const ExactRational& r0) {
  if (r0 <= 0) throw InputError("r0 must be positive");
  return quadric_residual(m, r0, quadric_coefficient(m));
}

}  // namespace bour::surf
