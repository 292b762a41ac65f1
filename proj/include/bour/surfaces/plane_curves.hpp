#pragma once

#include "bour/elimination/implicitize.hpp"
#include "bour/surfaces/ribaucour.hpp"
#include "bour/surfaces/surface.hpp"

namespace bour::surf {

/// theta = 0 section: (x(r), z(r)) over the registry {r}.
inline std::pair<Polynomial, Polynomial> profile_parametrization(long m) {
  require_symbolic_m(m);
  VariableRegistry reg{"r"};
  auto rp = [&](long k, const ExactRational& c) {
    return Polynomial::variable(reg, "r", static_cast<unsigned>(k)).scaled(GaussianRational(c));
  };
  return {rp(m - 1, make_rational(1, m - 1)) - rp(m + 1, make_rational(1, m + 1)), rp(m, make_rational(2, m))};
}

/// Implicit equation of the theta = 0 section in the xz-plane.
inline elim::ImplicitResult profile_curve(long m) {
  auto [x, z] = profile_parametrization(m);
  return elim::implicitize_profile(x, z, {"x", "z"});
}

/// (x, y) of the r = 1 boundary as polynomials in (c, s).
inline RationalMap boundary_parametrization(long m) {
  PolyVec3 X = circle_of_radius(m, 1);
  return RationalMap({RationalFunction(X[0]), RationalFunction(X[1])});
}

inline Polynomial unit_circle_relation() {
  auto reg = cs_registry();
  Polynomial c = Polynomial::variable(reg, "c"), s = Polynomial::variable(reg, "s");
  return c * c + s * s - Polynomial(reg, GaussianRational(1));
}

/// xy-projection of the r = 1 boundary (the deltoid for m = 3), by
/// eliminating c, s with c^2 + s^2 = 1.
inline elim::ImplicitResult boundary_curve(long m, const elim::ImplicitOptions& base = {}) {
  elim::ImplicitOptions o = base;
  o.method = elim::ImplicitMethod::groebner;
  o.relations = {unit_circle_relation()};
  return elim::implicitize_map(boundary_parametrization(m), {"x", "y"}, o);
}

/// Rational point (c, s) on the unit circle from the slope t of the chord
/// through (-1, 0): c = (1 - t^2)/(1 + t^2), s = 2t/(1 + t^2).
inline std::pair<ExactRational, ExactRational> rational_circle_point(const ExactRational& t) {
  ExactRational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

}  // namespace bour::surf
