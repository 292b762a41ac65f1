#pragma once

#include <string>

#include "bour/core/calculus.hpp"
#include "bour/surfaces/curve.hpp"

namespace bour::surf {

inline const std::string kW = "w";

inline VariableRegistry w_registry() { return VariableRegistry{kW}; }

struct IntegralFreeData {
  Polynomial phi, f1, f2, f3;
};

/// f1 = (1 - w^2) phi'' + 2w phi' - 2 phi
/// f2 = i((1 + w^2) phi'' - 2w phi' + 2 phi)
/// f3 = 2(w phi'' - phi')
inline IntegralFreeData integral_free_components(const Polynomial& phi) {
  const auto& reg = phi.registry();
  reg.require(kW);
  Polynomial w = Polynomial::variable(reg, kW);
  Polynomial one(reg, GaussianRational(1));
  Polynomial d1 = derivative(phi, kW), d2 = derivative(d1, kW);
  Polynomial w2 = w * w;
  Polynomial f1 = (one - w2) * d2 + (w * d1).scaled(2) - phi.scaled(2);
  Polynomial f2 = ((one + w2) * d2 - (w * d1).scaled(2) + phi.scaled(2)).scaled(GaussianRational::i());
  Polynomial f3 = (w * d2 - d1).scaled(2);
  return {phi, f1, f2, f3};
}

/// phi = (w^2 - 1) f1 / 4 - i (w^2 + 1) f2 / 4 - w f3 / 2
inline Polynomial phi_from_components(const Polynomial& f1, const Polynomial& f2, const Polynomial& f3) {
  Polynomial::check_same_registry(f1, f2);
  Polynomial::check_same_registry(f1, f3);
  const auto& reg = f1.registry();
  Polynomial w = Polynomial::variable(reg, kW);
  Polynomial one(reg, GaussianRational(1));
  Polynomial w2 = w * w;
  return ((w2 - one) * f1).scaled(make_rational(1, 4)) -
         ((w2 + one) * f2).scaled(GaussianRational(0, make_rational(1, 4))) -
         (w * f3).scaled(make_rational(1, 2));
}

/// w^(m+1) / ((m-1) m (m+1)).
inline Polynomial phi_bour(long m) {
  require_symbolic_m(m);
  return Polynomial::variable(w_registry(), kW, static_cast<unsigned>(m + 1))
      .scaled(GaussianRational(make_rational(1, (m - 1) * m * (m + 1))));
}

/// The components read as a curve in zeta.
inline MinimalCurve as_curve(const IntegralFreeData& d) {
  Polynomial zeta = Polynomial::variable(zeta_registry(), kZeta);
  auto rename = [&](const Polynomial& p) { return substitute(p, {{kW, zeta}}); };
  return {rename(d.f1), rename(d.f2), rename(d.f3)};
}

}  // namespace bour::surf
