#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bour/core.hpp"
#include "test_support.hpp"

using namespace bour;
using bour::testing::random_poly;
using bour::testing::var;

namespace {

const VariableRegistry kXYZ{"x", "y", "z"};
const VariableRegistry kUV{"u", "v"};

Polynomial P(const char* text, const VariableRegistry& reg = kXYZ) { return poly_parse(text, reg); }

// Dense univariate polynomials over Q, lowest degree first. Used as an
// independent gcd oracle.
using Dense = std::vector<ExactRational>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dense_rem(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    ExactRational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  ExactRational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

Dense to_dense(const Polynomial& p) {
  Dense d(p.degree_in(0) + 1, ExactRational(0));
  for (const auto& t : p.terms()) d[t.monomial[0]] = t.coefficient.re();
  return d;
}

}  // namespace

TEST(RingOps, DifferenceOfSquares) { EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2")); }

TEST(RingOps, AddZero) {
  Polynomial p = P("3*x^2*y - 1/2*z + 7");
  EXPECT_EQ(p + Polynomial(kXYZ), p);
}

TEST(RingOps, SquareOfGaussianLinearForm) {
  Polynomial u = var(kUV, "u"), v = var(kUV, "v");
  Polynomial l = u + v.scaled(GaussianRational::i());
  // expected from (u + iv)^2 = u^2 + 2iuv + (iv)^2 written out term by term
  Polynomial expected = u * u - v * v + (u * v).scaled(GaussianRational(0, 2));
  EXPECT_EQ(l * l, expected);
  EXPECT_EQ(l.pow(2), expected);
}

TEST(RingOps, RegistryMismatchIsInputError) {
  EXPECT_THROW(var(kXYZ, "x") + var(kUV, "u"), InputError);
  EXPECT_THROW(var(kXYZ, "x") * var(kUV, "u"), InputError);
}

TEST(RingOps, RandomizedAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng, kXYZ, 3, 5, trial % 2), b = random_poly(rng, kXYZ, 3, 5),
               c = random_poly(rng, kXYZ, 2, 4, true);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(RingOps, ExponentOverflowIsChecked) {
  Polynomial x = var(kXYZ, "x");
  EXPECT_THROW(x.pow(40000), InputError);
}

TEST(Derivative, PowerRule) {
  VariableRegistry z{"zeta"};
  Polynomial p = poly_parse("1/24*zeta^4", z);
  EXPECT_EQ(derivative(p, "zeta"), poly_parse("1/6*zeta^3", z));
}

TEST(Derivative, ConstantGivesZero) { EXPECT_TRUE(derivative(Polynomial(kUV, 5), "u").is_zero()); }

TEST(Derivative, UnknownVariable) { EXPECT_THROW(derivative(P("x"), "w"), InputError); }

TEST(Derivative, ProductRuleAndLinearity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_poly(rng, kXYZ, 4, 5, true), q = random_poly(rng, kXYZ, 4, 5);
    for (const char* v : {"x", "y", "z"}) {
      EXPECT_TRUE((derivative(p * q, v) - (derivative(p, v) * q + p * derivative(q, v))).is_zero());
      EXPECT_EQ(derivative(p + q.scaled(3), v), derivative(p, v) + derivative(q, v).scaled(3));
    }
  }
}

TEST(Substitute, Renaming) {
  VariableRegistry cs{"c", "s"};
  auto r = substitute(P("x^2 + y^2", VariableRegistry{"x", "y"}), {{"x", var(cs, "c")}, {"y", var(cs, "s")}});
  EXPECT_EQ(r, poly_parse("c^2 + s^2", cs));
}

TEST(Substitute, DeMoivreSquare) {
  VariableRegistry z{"zeta"};
  Polynomial image = var(kUV, "u") + var(kUV, "v").scaled(GaussianRational::i());
  auto r = substitute(poly_parse("zeta^2", z), {{"zeta", image}});
  EXPECT_EQ(r, poly_parse("u^2 - v^2 + (0+2*i)*u*v", kUV));
}

TEST(Substitute, ComposesWithEvaluation) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p = random_poly(rng, kXYZ, 3, 6);
    Polynomial gx = random_poly(rng, kUV, 2, 3), gy = random_poly(rng, kUV, 2, 3), gz = random_poly(rng, kUV, 2, 3);
    Polynomial comp = substitute(p, {{"x", gx}, {"y", gy}, {"z", gz}});
    ExactRational u = make_rational(2, 5), v = make_rational(-3, 7);
    auto inner = [&](const Polynomial& g) { return eval(g, {u, v}).re(); };
    EXPECT_EQ(eval(comp, {u, v}), eval(p, {inner(gx), inner(gy), inner(gz)}));
  }
}

TEST(SplitRealImag, Square) {
  VariableRegistry z{"zeta"};
  auto [re, im] = split_real_imag(poly_parse("zeta^2", z), "zeta");
  EXPECT_EQ(re, poly_parse("u^2 - v^2", kUV));
  EXPECT_EQ(im, poly_parse("2*u*v", kUV));
}

TEST(SplitRealImag, ITimesZeta) {
  VariableRegistry z{"zeta"};
  auto [re, im] = split_real_imag(poly_parse("(0+1*i)*zeta", z), "zeta");
  EXPECT_EQ(re, poly_parse("-v", kUV));
  EXPECT_EQ(im, poly_parse("u", kUV));
}

TEST(SplitRealImag, TwoThirdsZetaCubed) {
  VariableRegistry z{"zeta"};
  auto [re, im] = split_real_imag(poly_parse("2/3*zeta^3", z), "zeta");
  EXPECT_EQ(re, poly_parse("2/3*u^3 - 2*u*v^2", kUV));
  EXPECT_EQ(im, poly_parse("2*u^2*v - 2/3*v^3", kUV));
}

TEST(SplitRealImag, RejectsMultivariate) {
  VariableRegistry z{"zeta", "w"};
  EXPECT_THROW(split_real_imag(poly_parse("zeta*w", z), "zeta"), InputError);
}

TEST(SplitRealImag, DeMoivreUpToTwelve) {
  VariableRegistry z{"zeta"};
  for (unsigned k = 0; k <= 12; ++k) {
    // binomial expansion: (u + iv)^k = sum C(k,j) u^(k-j) i^j v^j
    std::vector<Polynomial::Term> re, im;
    BigInt binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * (k - j + 1) / j;
      Monomial m{k - j, j};
      int sign = (j / 2) % 2 ? -1 : 1;
      ExactRational c(binom * sign);
      (j % 2 ? im : re).push_back({m, GaussianRational(c)});
    }
    auto [r, i] = split_real_imag(Polynomial::variable(z, "zeta", k), "zeta");
    EXPECT_EQ(r, Polynomial::from_terms(kUV, re)) << "k=" << k;
    EXPECT_EQ(i, Polynomial::from_terms(kUV, im)) << "k=" << k;
  }
}

TEST(Gcd, Simple) { EXPECT_EQ(gcd(P("x^2 - 1"), P("x - 1")), P("x - 1")); }

TEST(Gcd, BothZero) { EXPECT_THROW(gcd(Polynomial(kXYZ), Polynomial(kXYZ)), InputError); }

TEST(Gcd, SharedCircleFactor) {
  Polynomial circle = P("x^2 + y^2 - 1");
  EXPECT_EQ(gcd(circle * P("x - 2"), circle * P("y + 3")), circle);
}

TEST(Gcd, ZeroAndNonzero) { EXPECT_EQ(gcd(Polynomial(kXYZ), P("-2*x + 4")), P("x - 2")); }

TEST(Gcd, UnivariateAgreesWithDenseEuclid) {
  std::mt19937 rng(5);
  VariableRegistry x{"x"};
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial g = random_poly(rng, x, 3, 3), a = random_poly(rng, x, 4, 4), b = random_poly(rng, x, 4, 4);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    Polynomial lhs = gcd(a * g, b * g);
    Dense expect = dense_gcd(to_dense(a * g), to_dense(b * g));
    Dense got = to_dense(lhs);
    ExactRational lead = got.back();
    for (auto& c : got) c /= lead;
    EXPECT_EQ(got, expect);
  }
}

TEST(Gcd, MultivariateAssociateProperty) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 12; ++trial) {
    Polynomial a = random_poly(rng, kXYZ, 2, 3), b = random_poly(rng, kXYZ, 2, 3), g = random_poly(rng, kXYZ, 2, 3);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    Polynomial lhs = gcd(a * g, b * g);
    Polynomial rhs = normalize_primitive_integer(g * gcd(a, b), MonomialOrder::lex());
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Squarefree, SquareOfLinear) { EXPECT_EQ(squarefree_part(P("x^2 + 2*x*y + y^2")), P("x + y")); }

TEST(Squarefree, ContentFactorsKept) {
  // y^2 is content with respect to x; it must still be reduced
  EXPECT_EQ(squarefree_part(P("x^3*y^2 - x*y^2")), P("x^3*y - x*y"));
}

TEST(Squarefree, DecompositionReassembles) {
  Polynomial a = P("x + y"), b = P("x^2 + z"), c = P("y - 3");
  Polynomial p = a * b.pow(2) * c.pow(3);
  auto parts = squarefree_decomposition(p);
  Polynomial prod(kXYZ, 1);
  for (const auto& sf : parts) prod *= sf.factor.pow(sf.multiplicity);
  EXPECT_EQ(normalize_primitive_integer(prod), normalize_primitive_integer(p));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].multiplicity, 1u);
  EXPECT_EQ(parts[2].multiplicity, 3u);
}

TEST(Normalize, ClearsDenominators) { EXPECT_EQ(normalize_primitive_integer(P("1/2*x + 1/3")), P("3*x + 2")); }

TEST(Normalize, SignAndContentLex) {
  EXPECT_EQ(normalize_primitive_integer(P("-2*x^2 + 4"), MonomialOrder::lex()), P("x^2 - 2"));
}

TEST(Normalize, ZeroStaysZero) { EXPECT_TRUE(normalize_primitive_integer(Polynomial(kXYZ)).is_zero()); }

TEST(Normalize, ScalarInvariantAndIdempotent) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_poly(rng, kXYZ, 3, 5);
    if (p.is_zero()) continue;
    ExactRational c = bour::testing::random_rational(rng);
    for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
      Polynomial n = normalize_primitive_integer(p, order);
      EXPECT_EQ(normalize_primitive_integer(p.scaled(GaussianRational(c)), order), n);
      EXPECT_EQ(normalize_primitive_integer(n, order), n);
    }
  }
}

TEST(Text, ZeroPrintsAsZero) { EXPECT_EQ(canonical_text(Polynomial(kXYZ)), "0"); }

TEST(Text, RoundTripExample) {
  VariableRegistry xy{"x", "y"};
  EXPECT_EQ(canonical_text(poly_parse("x^2 - 2*x*y + y^2", xy)), "x^2 - 2*x*y + y^2");
}

TEST(Text, GaussianCoefficients) {
  Polynomial p = poly_parse("(1/2+3/4*i)*x^2 - 5*y + (0-1*i)", kXYZ);
  EXPECT_EQ(poly_parse(canonical_text(p), kXYZ), p);
  EXPECT_EQ(p.coefficient(Monomial{2, 0, 0}), GaussianRational(make_rational(1, 2), make_rational(3, 4)));
}

TEST(Text, ProfileQuarticVanishesAtUnitParameter) {
  VariableRegistry xz{"x", "z"};
  Polynomial p = poly_parse("1024*x^3 + 864*x*z^2 - 288*z^2 + 81*z^4", xz);
  EXPECT_TRUE(eval(p, {make_rational(1, 4), make_rational(2, 3)}).is_zero());
}

TEST(Text, RandomRoundTrip) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, kXYZ, 4, 6, trial % 3 == 0);
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()})
      EXPECT_EQ(poly_parse(canonical_text(p, order), kXYZ), p);
  }
}

TEST(Text, DocumentRoundTrip) {
  Polynomial p = P("-7/3*x*y^2*z + 2*z^5 - 1");
  std::string doc = poly_document(p);
  EXPECT_EQ(doc.substr(0, 12), "vars: x,y,z\n");
  EXPECT_EQ(parse_poly_document(doc), p);
  EXPECT_EQ(poly_document(parse_poly_document(doc)), doc);
}

TEST(Text, ParseErrorReportsPosition) {
  try {
    poly_parse("x^2 + * y", kXYZ);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 7u);
    EXPECT_EQ(e.token(), "*");
  }
  EXPECT_THROW(poly_parse("x + w", kXYZ), ParseError);
}

TEST(Text, InferredRegistry) {
  Polynomial p = poly_parse("b*a + c");
  EXPECT_EQ(p.registry().joined(), "b,a,c");
}

TEST(Eval, Exact) { EXPECT_EQ(eval(P("x^2 + y^2 + z^2"), {1, 2, 2}), GaussianRational(9)); }

TEST(Eval, OriginGivesConstantTerm) {
  Polynomial p = P("3*x*y - 2*z + 11/5");
  EXPECT_EQ(eval(p, {0, 0, 0}), p.constant_term());
}

TEST(Eval, ArityMismatch) { EXPECT_THROW(eval(P("x"), {1, 2}), InputError); }

TEST(Eval, FloatingPointCloseToExact) {
  Polynomial p = P("1/3*x^3 - y*z + 5/7");
  double pt[3] = {0.5, -1.25, 2.0};
  double exact = eval(p, {make_rational(1, 2), make_rational(-5, 4), 2}).re().get_d();
  EXPECT_NEAR(eval_double(p, pt), exact, 1e-14);
}

TEST(RationalFunctionTest, ReducesToLowestTerms) {
  RationalFunction f(P("x^2 - 1"), P("2*x - 2"));
  EXPECT_EQ(f.numerator(), P("1/2*x + 1/2"));
  EXPECT_EQ(f.denominator(), P("1"));
  RationalFunction g(P("x^2 - 1"), P("-3*x^2 - 6*x - 3"));
  EXPECT_EQ(g.numerator(), P("-1/3*x + 1/3"));
  EXPECT_EQ(g.denominator(), P("x + 1"));
  EXPECT_THROW(RationalFunction(P("x"), Polynomial(kXYZ)), DivisionError);
}
