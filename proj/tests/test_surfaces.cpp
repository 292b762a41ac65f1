#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bour/core.hpp"
#include "bour/elimination.hpp"
#include "bour/surfaces.hpp"
#include "test_support.hpp"

using namespace bour;
using namespace bour::surf;
using bour::testing::random_poly;

namespace {

const VariableRegistry kZ{"zeta"};
const VariableRegistry kUV{"u", "v"};
const VariableRegistry kWReg{"w"};

Polynomial Z(const char* t) { return poly_parse(t, kZ); }
Polynomial UV(const char* t) { return poly_parse(t, kUV); }

}  // namespace

TEST(SurfaceIndexTest, ParsesForms) {
  EXPECT_TRUE(SurfaceIndex::parse("3").is_integer());
  auto half = SurfaceIndex::parse("1/2");
  EXPECT_EQ(half.kind, SurfaceIndex::Kind::rational);
  EXPECT_DOUBLE_EQ(half.value(), 0.5);
  EXPECT_EQ(SurfaceIndex::parse("2.5").kind, SurfaceIndex::Kind::real);
  EXPECT_EQ(SurfaceIndex::parse("-3/2").text(), "-3/2");
}

TEST(SurfaceIndexTest, RejectsExcludedValues) {
  for (const char* bad : {"-1", "0", "1", "2/2", "4/2", "1.0", "3/0", "x", "1/-2"})
    EXPECT_THROW(SurfaceIndex::parse(bad), InputError) << bad;
  EXPECT_THROW(SurfaceIndex::rational(2, 4), InputError);
  EXPECT_THROW(SurfaceIndex::parse("1/2").symbolic_m(), InputError);
}

TEST(BourCurve, ValueThree) {
  auto c = bour_curve(3);
  EXPECT_EQ(c.x, Z("1/2*zeta^2 - 1/4*zeta^4"));
  EXPECT_EQ(c.y, Z("(0+1/2*i)*zeta^2 + (0+1/4*i)*zeta^4"));
  EXPECT_EQ(c.z, Z("2/3*zeta^3"));
}

TEST(BourCurve, Enneper) {
  auto c = bour_curve(2);
  EXPECT_EQ(c.x, Z("zeta - 1/3*zeta^3"));
  EXPECT_EQ(c.y, Z("(0+1*i)*zeta + (0+1/3*i)*zeta^3"));
  EXPECT_EQ(c.z, Z("zeta^2"));
}

TEST(BourCurve, RejectsExcluded) {
  for (long m : {-1L, 0L, 1L}) EXPECT_THROW(bour_curve(m), InputError);
}

TEST(Isotropy, FamilyIsIsotropic) {
  for (long m = 2; m <= 10; ++m) EXPECT_TRUE(isotropy_certificate(bour_curve(m)).is_zero()) << m;
}

TEST(Isotropy, Counterexample) {
  MinimalCurve c{Z("zeta"), Z("zeta"), Z("zeta")};
  EXPECT_EQ(isotropy_certificate(c), Polynomial(kZ, 3));
}

TEST(Isotropy, IsotropicLine) {
  MinimalCurve c{Z("zeta"), Z("(0+1*i)*zeta"), Polynomial(kZ)};
  EXPECT_TRUE(isotropy_certificate(c).is_zero());
}

TEST(Weierstrass, ValueThree) {
  auto d = weierstrass_data_from_curve(bour_curve(3));
  EXPECT_EQ(d.F, Z("zeta"));
  EXPECT_EQ(d.G, Z("zeta"));
}

TEST(Weierstrass, RecoveryAndPatch) {
  for (long m = 2; m <= 8; ++m) {
    auto d = weierstrass_data_from_curve(bour_curve(m));
    EXPECT_EQ(d.F, Polynomial::variable(kZ, "zeta", static_cast<unsigned>(m - 2))) << m;
    EXPECT_EQ(d.G, Z("zeta")) << m;
    EXPECT_EQ(weierstrass_patch(d), bour_curve(m)) << m;
  }
}

TEST(Weierstrass, DegenerateCurve) {
  // phi1 = i phi2 makes phi1 - i phi2 vanish
  MinimalCurve c{Z("(0+1*i)*zeta"), Z("zeta"), Polynomial(kZ)};
  EXPECT_THROW(weierstrass_data_from_curve(c), DivisionError);
}

TEST(Weierstrass, InexactQuotient) {
  MinimalCurve c{Z("zeta^2"), Polynomial(kZ), Z("zeta")};  // phi3 = 1 is not divisible by 2 zeta
  EXPECT_THROW(weierstrass_data_from_curve(c), DivisionError);
}

TEST(Weierstrass, PlanePatch) {
  auto c = weierstrass_patch({Polynomial(kZ, 1), Polynomial(kZ)});
  EXPECT_EQ(c.x, Z("zeta"));
  EXPECT_EQ(c.y, Z("(0+1*i)*zeta"));
  EXPECT_TRUE(c.z.is_zero());
}

TEST(Weierstrass, PatchesOfRandomDataAreIsotropic) {
  std::mt19937 rng(31);
  for (int k = 0; k < 15; ++k) {
    Polynomial F = random_poly(rng, kZ, 3, 3, true), G = random_poly(rng, kZ, 3, 3, true);
    if (F.is_zero()) continue;
    EXPECT_TRUE(isotropy_certificate(weierstrass_patch({F, G})).is_zero());
  }
}

TEST(Cartesian, ValueThreeMatchesExpansion) {
  auto s = cartesian_surface(3);
  EXPECT_EQ(s.x, UV("-1/4*u^4 - 1/4*v^4 + 3/2*u^2*v^2 + 1/2*u^2 - 1/2*v^2"));
  EXPECT_EQ(s.y, UV("-u^3*v + u*v^3 - u*v"));
  EXPECT_EQ(s.z, UV("2/3*u^3 - 2*u*v^2"));
}

TEST(Cartesian, ValueFourMatchesExpansion) {
  auto s = cartesian_surface(4);
  EXPECT_EQ(s.x, UV("1/3*u^3 - u*v^2 - 1/5*u^5 + 2*u^3*v^2 - u*v^4"));
  EXPECT_EQ(s.y, UV("-u^2*v + 1/3*v^3 - u^4*v + 2*u^2*v^3 - 1/5*v^5"));
  EXPECT_EQ(s.z, UV("1/2*u^4 - 3*u^2*v^2 + 1/2*v^4"));
}

TEST(Cartesian, Degrees) {
  for (long m = 2; m <= 8; ++m) {
    auto s = cartesian_surface(m);
    EXPECT_EQ(s.x.total_degree(), m + 1);
    EXPECT_EQ(s.y.total_degree(), m + 1);
    EXPECT_EQ(s.z.total_degree(), m);
  }
}

TEST(Polar, UnitPointOfValueThree) {
  auto p = polar_eval(SurfaceIndex::integer(3), 1.0, 0.0);
  EXPECT_DOUBLE_EQ(p[0], 0.25);
  EXPECT_DOUBLE_EQ(p[1], 0.0);
  EXPECT_NEAR(p[2], 2.0 / 3.0, 1e-15);
}

TEST(Polar, BranchPointAtOrigin) {
  for (double t : {0.0, 0.7, 2.0, 5.5}) {
    auto p = polar_eval(SurfaceIndex::integer(3), 0.0, t);
    EXPECT_EQ(p[0], 0.0);
    EXPECT_EQ(p[1], 0.0);
    EXPECT_EQ(p[2], 0.0);
  }
}

TEST(Polar, AgreesWithCartesianForm) {
  auto s = cartesian_surface(3);
  const double r = 0.5, t = std::numbers::pi / 3;
  double uv[2] = {r * std::cos(t), r * std::sin(t)};
  auto p = polar_eval(SurfaceIndex::integer(3), r, t);
  EXPECT_NEAR(p[0], eval_double(s.x, uv), 1e-12);
  EXPECT_NEAR(p[1], eval_double(s.y, uv), 1e-12);
  EXPECT_NEAR(p[2], eval_double(s.z, uv), 1e-12);
}

TEST(Polar, ConjugateIsImaginaryPart) {
  auto c = bour_curve(2);
  const double r = 0.8, t = 1.1;
  double uv[2] = {r * std::cos(t), r * std::sin(t)};
  auto p = polar_eval(SurfaceIndex::integer(2, std::numbers::pi / 2), r, t);
  EXPECT_NEAR(p[0], eval_double(split_real_imag(c.x, kZeta).second, uv), 1e-12);
  EXPECT_NEAR(p[2], eval_double(split_real_imag(c.z, kZeta).second, uv), 1e-12);
}

TEST(Polar, FractionalIndex) {
  auto idx = SurfaceIndex::parse("1/2");
  auto p = polar_eval(idx, 0.25, 0.0);
  // zeta^(-1/2)/(-1/2) - zeta^(3/2)/(3/2) at zeta = 1/4
  EXPECT_NEAR(p[0], -2.0 * 2.0 - (1.0 / 8.0) / 1.5, 1e-12);
  EXPECT_THROW(polar_eval(idx, -0.5, 0.0), InputError);
  EXPECT_THROW(polar_eval(idx, 0.0, 0.0), InputError);
}

TEST(GaussMap, ComponentsVerbatim) {
  auto n = gauss_map(3);
  Polynomial d = UV("u^2 + v^2 + 1");
  EXPECT_EQ(n[0], RationalFunction(UV("2*u"), d));
  EXPECT_EQ(n[1], RationalFunction(UV("2*v"), d));
  EXPECT_EQ(n[2], RationalFunction(UV("u^2 + v^2 - 1"), d));
}

TEST(GaussMap, UnitLength) {
  auto n = gauss_map(4);
  RationalFunction len = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
  EXPECT_EQ(len, RationalFunction(Polynomial(kUV, 1)));
}

TEST(GaussMap, ParallelToSurfaceNormal) {
  for (long m = 2; m <= 6; ++m) {
    auto s = cartesian_surface(m);
    EXPECT_TRUE(is_zero(gauss_parallel_certificate(s))) << m;
    EXPECT_GT(eval(dot(unnormalized_normal(s), gauss_numerator()), {1, 1}).re(), 0) << m;
  }
}

TEST(Forms, Plane) {
  RealParamSurface plane{UV("u"), UV("v"), Polynomial(kUV)};
  auto ff = fundamental_forms(plane);
  EXPECT_EQ(ff.E, Polynomial(kUV, 1));
  EXPECT_EQ(ff.G1, Polynomial(kUV, 1));
  EXPECT_TRUE(ff.F1.is_zero());
  EXPECT_TRUE(ff.e.is_zero() && ff.f.is_zero() && ff.g.is_zero());
  EXPECT_TRUE(minimality_certificate(plane).is_zero());
}

TEST(Forms, ConformalAndMinimal) {
  for (long m = 2; m <= 6; ++m) {
    auto s = cartesian_surface(m);
    auto ff = fundamental_forms(s);
    EXPECT_TRUE((ff.E - ff.G1).is_zero()) << m;
    EXPECT_TRUE(ff.F1.is_zero()) << m;
    EXPECT_TRUE(minimality_certificate(s).is_zero()) << m;
  }
}

TEST(Forms, FirstFormPositiveAtSamples) {
  auto ff = fundamental_forms(cartesian_surface(3));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      ExactRational u = make_rational(a, 2), v = make_rational(b, 3);
      ExactRational E = eval(ff.E, {u, v}).re(), F = eval(ff.F1, {u, v}).re(), G = eval(ff.G1, {u, v}).re();
      EXPECT_GE(E, 0);
      EXPECT_GE(G, 0);
      EXPECT_GE(E * G - F * F, 0);
    }
}

TEST(Forms, ParaboloidIsNotMinimal) {
  RealParamSurface graph{UV("u"), UV("v"), UV("u^2 + v^2")};
  EXPECT_FALSE(minimality_certificate(graph).is_zero());
}

TEST(Forms, BranchPoint) {
  EXPECT_FALSE(has_branch_point_at_origin(cartesian_surface(2)));
  for (long m = 3; m <= 6; ++m) EXPECT_TRUE(has_branch_point_at_origin(cartesian_surface(m))) << m;
}

TEST(Support, ValueThree) {
  RationalFunction expected(UV("u^2 + v^2 + 2") * UV("3*u*v^2 - u^3"), UV("6*u^2 + 6*v^2 + 6"));
  EXPECT_EQ(support_function(3), expected);
}

TEST(Support, ValueFour) {
  // printed with +v^4; on the axis u = 0 the support is -v^4 (3 v^2 + 5) / 30 (1 + v^2)
  RationalFunction expected(UV("3*u^2 + 3*v^2 + 5") * UV("-v^4 + 6*u^2*v^2 - u^4"), UV("30*u^2 + 30*v^2 + 30"));
  EXPECT_EQ(support_function(4), expected);
  RationalFunction printed(UV("3*u^2 + 3*v^2 + 5") * UV("v^4 + 6*u^2*v^2 - u^4"), UV("30*u^2 + 30*v^2 + 30"));
  EXPECT_FALSE(tangent_plane_residual(4, printed).is_zero());
}

TEST(Support, AxisRestriction) {
  // independent of the chart code: n . X on v = 0 by hand
  auto s = cartesian_surface(4);
  for (int k = 1; k <= 5; ++k) {
    ExactRational u = make_rational(k, 3), one(1);
    ExactRational x = eval(s.x, {u, ExactRational(0)}).re(), z = eval(s.z, {u, ExactRational(0)}).re();
    ExactRational P = -(2 * u * x + (u * u - one) * z) / (u * u + one);
    EXPECT_EQ(support_function(4).eval(std::vector<ExactRational>{u, 0}).re(), P);
  }
}

TEST(Support, PlaneHasZeroSupport) {
  // n = (0,0,1) on the plane z = 0: P = -n . x = 0
  RealParamSurface plane{UV("u"), UV("v"), Polynomial(kUV)};
  Polynomial P = -(plane.z);
  EXPECT_TRUE(P.is_zero());
}

TEST(Support, TangentPlaneIdentity) {
  for (long m = 2; m <= 4; ++m) EXPECT_TRUE(tangent_plane_residual(m, support_function(m)).is_zero()) << m;
}

TEST(Tangential, ValueThreeCoordinates) {
  auto chart = tangential_chart(3);
  Polynomial D = UV("u^2 + v^2 + 2") * UV("3*u*v^2 - u^3");
  EXPECT_EQ(chart.coordinates[0], RationalFunction(UV("12*u"), D));
  EXPECT_EQ(chart.coordinates[1], RationalFunction(UV("12*v"), D));
  EXPECT_EQ(chart.coordinates[2], RationalFunction(UV("6*u^2 + 6*v^2 - 6"), D));
}

TEST(Tangential, ValueFourCoordinates) {
  auto chart = tangential_chart(4);
  Polynomial D = UV("3*u^2 + 3*v^2 + 5") * UV("-v^4 + 6*u^2*v^2 - u^4");
  EXPECT_EQ(chart.coordinates[0], RationalFunction(UV("60*u"), D));
  EXPECT_EQ(chart.coordinates[2], RationalFunction(UV("30*u^2 + 30*v^2 - 30"), D));
}

TEST(Tangential, DefiningIdentities) {
  for (long m = 2; m <= 4; ++m) {
    auto chart = tangential_chart(m);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(chart.coordinates[k] * chart.P, chart.n[k]) << m;
  }
}

TEST(ClassAndDegree, Classes) {
  for (long m : {2L, 3L, 4L}) {
    auto r = surface_class(m);
    EXPECT_EQ(r.total_degree, ribaucour_class(m, 1)) << m;
    EXPECT_TRUE(r.certificate.is_zero()) << m;
  }
}

TEST(ClassAndDegree, PrintedTangentialEquationThree) {
  auto r = surface_class(3);
  auto diff = term_diff(r.polynomial, *reference_tangential(3), true);
  EXPECT_TRUE(diff.identical()) << diff.report();
}

TEST(ClassAndDegree, Degrees) {
  EXPECT_EQ(surface_degree(2).total_degree, 9);
  auto r = surface_degree(3);
  EXPECT_EQ(r.total_degree, 16);
  EXPECT_EQ(r.polynomial.size(), 74u);
  auto diff = term_diff(r.polynomial, reference_degree_partial(3), false);
  EXPECT_EQ(diff.matched.size(), 5u) << diff.report();
  EXPECT_EQ(diff.sign, 1);
}

TEST(ClassAndDegree, Guards) {
  EXPECT_THROW(surface_degree(4), InputError);
  try {
    surface_degree(5);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("time problem"), std::string::npos);
  }
  EXPECT_THROW(surface_class(5), InputError);
}

TEST(Ribaucour, ClassFormula) {
  EXPECT_EQ(ribaucour_class(3, 1), 8);
  EXPECT_EQ(ribaucour_class(4, 1), 10);
  EXPECT_EQ(ribaucour_class(2, 1), 6);
  EXPECT_EQ(ribaucour_class(1, 2), 12);
  EXPECT_THROW(ribaucour_class(2, 4), InputError);
  EXPECT_THROW(ribaucour_class(1, 1), InputError);
  EXPECT_THROW(ribaucour_class(-3, 1), InputError);
}

TEST(Ribaucour, DegreeFormula) {
  for (long m = 2; m <= 10; ++m) EXPECT_EQ(ribaucour_degree(m), (m + 1) * (m + 1));
  EXPECT_EQ(ribaucour_degree(2), 9);
  EXPECT_EQ(ribaucour_degree(3), 16);
  EXPECT_EQ(ribaucour_degree(4), 25);
}

TEST(Trig, SmallCases) {
  VariableRegistry cs = cs_registry();
  auto [c0, s0] = trig_expand(0);
  EXPECT_EQ(c0, Polynomial(cs, 1));
  EXPECT_TRUE(s0.is_zero());
  auto [c3, s3] = trig_expand(3);
  EXPECT_EQ(c3, poly_parse("c^3 - 3*c*s^2", cs));
  EXPECT_EQ(s3, poly_parse("3*c^2*s - s^3", cs));
}

TEST(Trig, FloatOracle) {
  for (unsigned k = 0; k <= 12; ++k) {
    auto [ck, sk] = trig_expand(k);
    for (double t : {0.3, 1.7, -2.4}) {
      double pt[2] = {std::cos(t), std::sin(t)};
      EXPECT_NEAR(eval_double(ck, pt), std::cos(k * t), 1e-12);
      EXPECT_NEAR(eval_double(sk, pt), std::sin(k * t), 1e-12);
    }
  }
}

TEST(Quadric, Membership) {
  EXPECT_TRUE(quadric_certificate(3, 1).is_zero());
  for (long m = 2; m <= 6; ++m)
    for (auto r0 : {make_rational(1, 2), make_rational(1), make_rational(2)})
      EXPECT_TRUE(quadric_certificate(m, r0).is_zero()) << m;
}

TEST(Quadric, PerturbedCoefficientFails) {
  EXPECT_FALSE(quadric_residual(3, 1, quadric_coefficient(3) + 1).is_zero());
  EXPECT_FALSE(quadric_residual(4, make_rational(1, 2), -quadric_coefficient(4)).is_zero());
}

TEST(IntegralFree, ValueThree) {
  auto d = integral_free_components(phi_bour(3));
  EXPECT_EQ(d.phi, poly_parse("1/24*w^4", kWReg));
  EXPECT_EQ(d.f1, poly_parse("1/2*w^2 - 1/4*w^4", kWReg));
  EXPECT_EQ(d.f2, poly_parse("(0+1/2*i)*w^2 + (0+1/4*i)*w^4", kWReg));
  EXPECT_EQ(d.f3, poly_parse("2/3*w^3", kWReg));
}

TEST(IntegralFree, EnneperFromCubic) {
  auto d = integral_free_components(poly_parse("1/6*w^3", kWReg));
  EXPECT_EQ(as_curve(d), bour_curve(2));
}

TEST(IntegralFree, ZeroPhi) {
  auto d = integral_free_components(Polynomial(kWReg));
  EXPECT_TRUE(d.f1.is_zero() && d.f2.is_zero() && d.f3.is_zero());
  EXPECT_TRUE(phi_from_components(d.f1, d.f2, d.f3).is_zero());
}

TEST(IntegralFree, FamilyRoundTrip) {
  for (long m = 2; m <= 10; ++m) {
    auto d = integral_free_components(phi_bour(m));
    EXPECT_EQ(as_curve(d), bour_curve(m)) << m;
    EXPECT_EQ(phi_from_components(d.f1, d.f2, d.f3), d.phi) << m;
  }
}

TEST(IntegralFree, RandomCubicRoundTrip) {
  std::mt19937 rng(41);
  for (int k = 0; k < 20; ++k) {
    Polynomial phi = random_poly(rng, kWReg, 3, 4, true);
    auto d = integral_free_components(phi);
    EXPECT_EQ(phi_from_components(d.f1, d.f2, d.f3), phi);
  }
}

TEST(IntegralFree, PhiBour) {
  EXPECT_EQ(phi_bour(3), poly_parse("1/24*w^4", kWReg));
  EXPECT_EQ(phi_bour(4), poly_parse("1/60*w^5", kWReg));
  EXPECT_EQ(phi_bour(5), poly_parse("1/120*w^6", kWReg));
  for (long m = 2; m <= 4; ++m) {
    int d = (phi_bour(m) * phi_bour(m)).total_degree();
    EXPECT_EQ(d, 2 * m + 2);
    EXPECT_EQ(d, ribaucour_class(m, 1));
  }
}

TEST(Curvature, ValueThreeIsMinusFourPi) {
  double K = total_curvature_numeric(3, 1000.0, 4096, 64);
  EXPECT_NEAR(K / (-4 * std::numbers::pi), 1.0, 1e-3);
}

TEST(Curvature, PartialDiskMatchesAntiderivative) {
  for (double R : {0.5, 1.0, 3.0, 10.0}) {
    double K = total_curvature_numeric(3, R, 256, 16);
    EXPECT_NEAR(K, total_curvature_disk_exact(R), 1e-6 * std::fabs(total_curvature_disk_exact(R))) << R;
  }
}

TEST(Curvature, EnneperSameLimit) {
  double K = total_curvature_numeric(2, 1000.0, 4096, 64);
  EXPECT_NEAR(K / (-4 * std::numbers::pi), 1.0, 1e-3);
}

TEST(Curvature, RejectsBadGrid) {
  EXPECT_THROW(total_curvature_numeric(3, 1.0, 8, 64), InputError);
  EXPECT_THROW(total_curvature_numeric(3, -1.0, 64, 64), InputError);
}

TEST(Symmetry, RayAlongUZero) { EXPECT_TRUE(is_zero(ray_certificate(cartesian_surface(3)))); }

TEST(Symmetry, ThirdTurnEquivariance) {
  auto s = cartesian_surface(3);
  EXPECT_EQ(rotate_parameters_third(s, 1), rotate_space_third(s, 1));
  EXPECT_EQ(rotate_parameters_third(s, 2), rotate_space_third(s, 2));
  // the opposite rotation in space does not match
  EXPECT_NE(rotate_parameters_third(s, 1), rotate_space_third(s, 2));
}

TEST(PlaneCurves, ProfileQuartic) {
  auto r = profile_curve(3);
  EXPECT_EQ(r.total_degree, 4);
  auto [x, z] = profile_parametrization(3);
  for (int k = 1; k <= 20; ++k) {
    ExactRational t = make_rational(k, 7);
    EXPECT_TRUE(eval(r.polynomial, {eval(x, {t}).re(), eval(z, {t}).re()}).is_zero());
  }
  // the printed x^2 variant misses the point r = 1
  EXPECT_FALSE(eval(reference_profile_printed(), {make_rational(1, 4), make_rational(2, 3)}).is_zero());
}

TEST(PlaneCurves, EnneperProfile) {
  auto r = profile_curve(2);
  EXPECT_TRUE(r.certificate.is_zero());
  EXPECT_GT(r.total_degree, 0);
}

TEST(PlaneCurves, Deltoid) {
  auto r = boundary_curve(3);
  EXPECT_EQ(r.total_degree, 4);
  EXPECT_TRUE(r.certificate.is_zero());
  auto map = boundary_parametrization(3);
  for (int k = 0; k < 12; ++k) {
    auto [c, s] = rational_circle_point(make_rational(k - 5, 3));
    std::vector<ExactRational> pt{c, s};
    EXPECT_TRUE(eval(r.polynomial, {map[0].eval(pt).re(), map[1].eval(pt).re()}).is_zero());
  }
}
