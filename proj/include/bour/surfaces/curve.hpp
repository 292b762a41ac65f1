#pragma once

#include <string>

#include "bour/core/calculus.hpp"
#include "bour/core/gcd.hpp"
#include "bour/core/polynomial.hpp"
#include "bour/surfaces/index.hpp"

namespace bour::surf {

inline const std::string kZeta = "zeta";

inline VariableRegistry zeta_registry() { return VariableRegistry{kZeta}; }

/// Holomorphic curve Psi(zeta) in C^3; minimal when Psi' . Psi' = 0.
struct MinimalCurve {
  Polynomial x, y, z;

  PolyVec3 components() const { return {x, y, z}; }
  friend bool operator==(const MinimalCurve&, const MinimalCurve&) = default;
};

/// Weierstrass pair (F, G) as polynomials in zeta.
struct WeierstrassData {
  Polynomial F, G;
  friend bool operator==(const WeierstrassData&, const WeierstrassData&) = default;
};

inline Polynomial zeta_power(long k, const ExactRational& c = 1) {
  auto reg = zeta_registry();
  return Polynomial::variable(reg, kZeta, static_cast<unsigned>(k)).scaled(GaussianRational(c));
}

/// (zeta^(m-1)/(m-1) - zeta^(m+1)/(m+1), i(zeta^(m-1)/(m-1) + zeta^(m+1)/(m+1)), 2 zeta^m / m)
inline MinimalCurve bour_curve(long m) {
  require_symbolic_m(m);
  Polynomial a = zeta_power(m - 1, make_rational(1, m - 1));
  Polynomial b = zeta_power(m + 1, make_rational(1, m + 1));
  return {a - b, (a + b).scaled(GaussianRational::i()), zeta_power(m, make_rational(2, m))};
}

inline MinimalCurve derivative(const MinimalCurve& c) {
  return {derivative(c.x, kZeta), derivative(c.y, kZeta), derivative(c.z, kZeta)};
}

/// Psi' . Psi' (complex bilinear, no conjugation).
inline Polynomial isotropy_certificate(const MinimalCurve& c) {
  return dot(derivative(c).components(), derivative(c).components());
}

/// F = (phi1 - i phi2)/2 and G = phi3 / (phi1 - i phi2) with phi = Psi'.
inline WeierstrassData weierstrass_data_from_curve(const MinimalCurve& c) {
  MinimalCurve phi = derivative(c);
  Polynomial h = phi.x - phi.y.scaled(GaussianRational::i());
  if (h.is_zero()) throw DivisionError("phi1 - i*phi2 vanishes identically, so F = 0 and G is undefined");
  Polynomial G;
  try {
    G = exact_divide(phi.z, h);
  } catch (const DivisionError&) {
    throw DivisionError("G = phi3 / (phi1 - i*phi2) is not a polynomial");
  }
  return {h.scaled(GaussianRational(make_rational(1, 2))), G};
}

/// Curve with Psi' = (F(1 - G^2), iF(1 + G^2), 2FG) and Psi(0) = 0.
inline MinimalCurve weierstrass_patch(const WeierstrassData& d) {
  Polynomial::check_same_registry(d.F, d.G);
  if (d.F.registry().size() != 1) throw InputError("Weierstrass data must be univariate");
  if (d.F.is_zero()) throw InputError("F must not vanish identically");
  const std::string& var = d.F.registry().name(0);
  Polynomial one(d.F.registry(), GaussianRational(1));
  Polynomial g2 = d.G * d.G;
  // Polynomial data never produce a 1/zeta term, so the antiderivative
  // always stays polynomial.
  return {antiderivative(d.F * (one - g2), var),
          antiderivative((d.F * (one + g2)).scaled(GaussianRational::i()), var),
          antiderivative((d.F * d.G).scaled(GaussianRational(2)), var)};
}

}  // namespace bour::surf
