#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "bour/core/rational_map.hpp"
#include "bour/elimination/ideal.hpp"
#include "bour/surfaces/curve.hpp"

namespace bour::surf {

inline VariableRegistry uv_registry() { return VariableRegistry{"u", "v"}; }

/// Real parametrization (x, y, z)(u, v).
struct RealParamSurface {
  Polynomial x, y, z;

  PolyVec3 components() const { return {x, y, z}; }
  const VariableRegistry& registry() const { return x.registry(); }
};

inline RealParamSurface real_part(const MinimalCurve& c) {
  return {split_real_imag(c.x, kZeta).first, split_real_imag(c.y, kZeta).first,
          split_real_imag(c.z, kZeta).first};
}

/// Re of the curve under zeta = u + i v.
inline RealParamSurface cartesian_surface(long m) { return real_part(bour_curve(m)); }

/// Point of the associated family Re(e^{-i alpha} Psi(zeta)) at zeta = r e^{i theta}.
/// Non-integer m uses the principal power and needs r > 0.
inline std::array<double, 3> polar_eval(const SurfaceIndex& idx, double r, double theta) {
  const double m = idx.value();
  if (!idx.is_integer()) {
    if (r < 0) throw InputError("non-integer m needs r >= 0");
    if (r == 0 && m < 1) throw InputError("r = 0 is a pole for m < 1");
  }
  auto power = [&](double k) {
    // zeta^k = r^k e^{i k theta}; integer k keeps the sign of negative r
    double mag = idx.is_integer() ? std::pow(r, static_cast<int>(std::lround(k))) : std::pow(r, k);
    return std::polar(1.0, k * theta) * mag;
  };
  const std::complex<double> I(0.0, 1.0);
  std::complex<double> a = power(m - 1) / (m - 1), b = power(m + 1) / (m + 1);
  std::array<std::complex<double>, 3> psi{a - b, I * (a + b), 2.0 * power(m) / m};
  const std::complex<double> phase = std::polar(1.0, -idx.alpha);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    double v = (phase * psi[k]).real();
    out[k] = v == 0.0 ? 0.0 : v;  // no negative zero
  }
  return out;
}

/// Stereographic Gauss map of G = zeta: (2u, 2v, u^2 + v^2 - 1) / (u^2 + v^2 + 1).
inline RationalMap gauss_map(long m) {
  require_symbolic_m(m);
  auto reg = uv_registry();
  Polynomial u = Polynomial::variable(reg, "u"), v = Polynomial::variable(reg, "v");
  Polynomial one(reg, GaussianRational(1));
  Polynomial q = u * u + v * v;
  return RationalMap({RationalFunction(u.scaled(2), q + one), RationalFunction(v.scaled(2), q + one),
                      RationalFunction(q - one, q + one)});
}

/// Numerator vector of gauss_map.
inline PolyVec3 gauss_numerator() {
  auto reg = uv_registry();
  Polynomial u = Polynomial::variable(reg, "u"), v = Polynomial::variable(reg, "v");
  return {u.scaled(2), v.scaled(2), u * u + v * v - Polynomial(reg, GaussianRational(1))};
}

inline PolyVec3 partial(const PolyVec3& p, std::string_view var) {
  return {derivative(p[0], var), derivative(p[1], var), derivative(p[2], var)};
}

/// x_u cross x_v, not normalized.
inline PolyVec3 unnormalized_normal(const RealParamSurface& s) {
  auto X = s.components();
  return cross(partial(X, "u"), partial(X, "v"));
}

struct FundamentalForms {
  Polynomial E, F1, G1;  ///< first fundamental form
  Polynomial e, f, g;    ///< second form against x_u cross x_v
};

inline FundamentalForms fundamental_forms(const RealParamSurface& s) {
  auto X = s.components();
  auto Xu = partial(X, "u"), Xv = partial(X, "v");
  auto N = cross(Xu, Xv);
  return {dot(Xu, Xu), dot(Xu, Xv), dot(Xv, Xv), dot(N, partial(Xu, "u")), dot(N, partial(Xu, "v")),
          dot(N, partial(Xv, "v"))};
}

/// E g - 2 F f + G e, a positive multiple of the mean curvature off the branch locus.
inline Polynomial minimality_certificate(const RealParamSurface& s) {
  auto ff = fundamental_forms(s);
  return ff.E * ff.g - (ff.F1 * ff.f).scaled(2) + ff.G1 * ff.e;
}

/// Zero vector iff x_u cross x_v is parallel to the Gauss map numerator.
inline PolyVec3 gauss_parallel_certificate(const RealParamSurface& s) {
  return cross(unnormalized_normal(s), gauss_numerator());
}

inline bool is_zero(const PolyVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

/// Exact normal at (u, v).
inline std::array<ExactRational, 3> normal_at(const RealParamSurface& s, const ExactRational& u,
                                              const ExactRational& v) {
  auto n = unnormalized_normal(s);
  std::array<ExactRational, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = eval(n[k], {u, v}).re();
  return out;
}

/// True when x_u cross x_v vanishes at zeta = 0.
inline bool has_branch_point_at_origin(const RealParamSurface& s) {
  auto n = normal_at(s, 0, 0);
  return n[0] == 0 && n[1] == 0 && n[2] == 0;
}

/// Image of the surface under (u, v) rotated by `turns` thirds of a full
/// turn, computed exactly with s3 standing for sqrt(3) (reduced by s3^2 = 3).
/// Returned over the registry {u, v, s3}.
inline PolyVec3 rotate_parameters_third(const RealParamSurface& s, int turns) {
  VariableRegistry reg{"u", "v", "s3"};
  Polynomial u = Polynomial::variable(reg, "u"), v = Polynomial::variable(reg, "v");
  Polynomial r3 = Polynomial::variable(reg, "s3");
  Polynomial ru = u, rv = v;
  for (int k = 0; k < ((turns % 3) + 3) % 3; ++k) {
    // cos 2pi/3 = -1/2, sin 2pi/3 = s3/2
    Polynomial nu = (ru.scaled(-1) - r3 * rv).scaled(make_rational(1, 2));
    Polynomial nv = (r3 * ru - rv).scaled(make_rational(1, 2));
    ru = nu;
    rv = nv;
  }
  std::vector<Polynomial> rel{r3 * r3 - Polynomial(reg, GaussianRational(3))};
  PolyVec3 out;
  auto X = s.components();
  for (int k = 0; k < 3; ++k)
    out[k] = elim::normal_form(substitute(X[k], {{"u", ru}, {"v", rv}}), rel, MonomialOrder::lex());
  return out;
}

/// Rotation of (x, y) by `turns` thirds of a turn about the z axis, in the
/// same {u, v, s3} encoding.
inline PolyVec3 rotate_space_third(const RealParamSurface& s, int turns) {
  VariableRegistry reg{"u", "v", "s3"};
  Polynomial r3 = Polynomial::variable(reg, "s3");
  PolyVec3 p{embed(s.x, reg), embed(s.y, reg), embed(s.z, reg)};
  for (int k = 0; k < ((turns % 3) + 3) % 3; ++k) {
    Polynomial nx = (p[0].scaled(-1) - r3 * p[1]).scaled(make_rational(1, 2));
    Polynomial ny = (r3 * p[0] - p[1]).scaled(make_rational(1, 2));
    p[0] = nx;
    p[1] = ny;
  }
  std::vector<Polynomial> rel{r3 * r3 - Polynomial(reg, GaussianRational(3))};
  for (auto& c : p) c = elim::normal_form(c, rel, MonomialOrder::lex());
  return p;
}

/// Residuals of the u = 0 ray check: x(0,v) - x(0,-v), y(0,v), z(0,v).
inline PolyVec3 ray_certificate(const RealParamSurface& s) {
  auto reg = s.registry();
  Polynomial zero(reg);
  Polynomial v = Polynomial::variable(reg, "v");
  auto at = [&](const Polynomial& p, const Polynomial& vv) { return substitute(p, {{"u", zero}, {"v", vv}}); };
  return {at(s.x, v) - at(s.x, -v), at(s.y, v), at(s.z, v)};
}

}  // namespace bour::surf
