#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bour/elimination/implicitize.hpp"
#include "bour/surfaces/surface.hpp"

namespace bour::surf {

inline const std::vector<std::string> kCartesianNames{"x", "y", "z"};
inline const std::vector<std::string> kTangentialNames{"ubar", "vbar", "wbar"};

inline RationalMap as_map(const RealParamSurface& s) {
  return RationalMap({RationalFunction(s.x), RationalFunction(s.y), RationalFunction(s.z)});
}

/// P = -n . x, so that n . X + P = 0 is the tangent plane.
inline RationalFunction support_function(long m) {
  RationalMap n = gauss_map(m);
  RealParamSurface s = cartesian_surface(m);
  auto X = s.components();
  RationalFunction acc(Polynomial(s.registry()));
  for (int k = 0; k < 3; ++k) acc = acc + n[k] * RationalFunction(X[k]);
  return -acc;
}

/// n1 x + n2 y + n3 z + P, which must vanish identically.
inline RationalFunction tangent_plane_residual(long m, const RationalFunction& P) {
  RationalMap n = gauss_map(m);
  auto X = cartesian_surface(m).components();
  RationalFunction acc = P;
  for (int k = 0; k < 3; ++k) acc = acc + n[k] * RationalFunction(X[k]);
  return acc;
}

struct TangentialChart {
  RationalMap n;
  RationalFunction P;
  RationalMap coordinates;  ///< (ubar, vbar, wbar) = n / P
};

inline TangentialChart tangential_chart(long m) {
  RationalMap n = gauss_map(m);
  RationalFunction P = support_function(m);
  if (P.is_zero()) throw Error("support function vanishes identically");
  return {n, P, RationalMap({n[0] / P, n[1] / P, n[2] / P})};
}

struct SurfaceJobOptions {
  bool allow_long = false;
  elim::ImplicitOptions implicit;
};

inline const char* kDegreeTimeMessage =
    "degree computation for m >= 5 is a time problem: the elimination does not finish within any practical "
    "budget, so it is not attempted";

/// Implicit equation in tangential coordinates; its degree is the class.
inline elim::ImplicitResult surface_class(long m, const SurfaceJobOptions& options = {}) {
  require_symbolic_m(m);
  if (m > 4 && !options.allow_long) throw InputError("class for m > 4 needs the long-run flag");
  if (options.implicit.method != elim::ImplicitMethod::groebner)
    throw InputError("class computation supports the groebner method only");
  return elim::implicitize_map(tangential_chart(m).coordinates, kTangentialNames, options.implicit);
}

/// Implicit equation of the surface in (x, y, z); its degree is deg(B_m).
inline elim::ImplicitResult surface_degree(long m, const SurfaceJobOptions& options = {}) {
  require_symbolic_m(m);
  if (m >= 5) throw InputError(kDegreeTimeMessage);
  if (m == 4 && !options.allow_long) throw InputError("m = 4 runs for a long time; pass the long-run flag");
  if (options.implicit.method != elim::ImplicitMethod::groebner)
    throw InputError("surface implicitization supports the groebner method only");
  return elim::implicitize_map(as_map(cartesian_surface(m)), kCartesianNames, options.implicit);
}

/// One quoted term of a published equation.
struct ReferenceTerm {
  std::string monomial;     ///< e.g. "x^4*z^6", over x, y, z
  std::string coefficient;  ///< decimal integer
};

/// Leading terms quoted for the Cartesian implicit equations (m = 3, 4).
inline std::vector<ReferenceTerm> reference_degree_terms(long m) {
  if (m == 3)
    return {{"z^16", "43046721"},
            {"x^4*z^6", "-859963392"},
            {"x^4*y^2*z^4", "-764411904"},
            {"x^2*y^2*z^6", "-1719926784"},
            {"x^2*y^4*z^4", "509607936"}};
  if (m == 4)
    return {{"z^25", "48466299163780426235904"},
            {"x^4*z^20", "-147907407116029132800000"},
            {"x^2*y^2*z^20", "887444442696174796800000"},
            {"y^4*z^20", "-147907407116029132800000"},
            {"x^8*z^15", "-2640558873378816000000000"}};
  return {};
}

/// Total term count quoted alongside the leading terms.
inline std::optional<std::size_t> reference_degree_term_count(long m) {
  if (m == 3) return 74;
  if (m == 4) return 238;
  return std::nullopt;
}

/// Published tangential equations, transcribed as printed.
inline std::optional<Polynomial> reference_tangential(long m) {
  VariableRegistry reg(kTangentialNames);
  if (m == 3)
    return poly_parse(
        "9*ubar^8 + 72*ubar^7 + 144*ubar^6 + 288*ubar^5*wbar^2 + 192*ubar^3*wbar^4 + 8*ubar^6*wbar^2"
        " - 48*ubar^4*vbar^2*wbar^2 - 576*ubar*vbar^2*wbar^4 + 81*ubar^2*vbar^6 + 432*ubar^4*vbar^2"
        " - 45*ubar^6*vbar^2 - 72*ubar^5*vbar^2 + 432*ubar^2*vbar^4 - 360*ubar^3*vbar^4 - 216*ubar*vbar^6"
        " + 27*ubar^4*vbar^4 + 144*vbar^6 - 576*ubar^3*vbar^2*wbar^2 + 72*ubar^2*vbar^4*wbar^2"
        " - 864*ubar*vbar^4*wbar^2",
        reg);
  if (m == 4)
    return poly_parse(
        "900*ubar^8*wbar + 15*ubar^8*wbar^2 + 15*vbar^8*wbar^2 - 180*ubar^2*wbar^2"
        " - 180*ubar^2*vbar^6*wbar^2 + 3600*ubar^2*vbar^6*wbar + 416*ubar^4*vbar^6 - 3600*ubar^2*vbar^6"
        " - 3600*ubar^6*vbar^2 + 8640*ubar^2*vbar^2*wbar^5 - 176*ubar^2*vbar^8 - 5400*ubar^4*vbar^4"
        " + 416*ubar^6*vbar^4 - 900*vbar^8*wbar - 900*vbar^8 + 16*vbar^10 + 16*ubar^10 - 900*ubar^8"
        " - 1440*vbar^4*wbar^5 - 1440*ubar^4*wbar^5 - 2400*vbar^6*wbar^3 + 12000*ubar^4*vbar^2*wbar^3"
        " + 3600*ubar^6*vbar^2*wbar - 180*ubar^6*vbar^2*wbar^2 - 176*ubar^8*vbar^2 - 2400*ubar^6*wbar^3"
        " - 9000*ubar^4*vbar^4*wbar + 12000*ubar^2*vbar^4*wbar^3 + 570*ubar^4*vbar^4*wbar^2",
        reg);
  return std::nullopt;
}

/// Profile equation as printed, kept for the comparison report.
inline Polynomial reference_profile_printed() {
  return poly_parse("1024*x^2 + 864*x*z^2 - 288*z^2 + 81*z^4", VariableRegistry{"x", "z"});
}

/// Term-level comparison of a computed polynomial with a reference, up to
/// one global sign. With a partial reference only its own terms are checked.
struct TermDiff {
  int sign = 1;  ///< sign applied to the reference before comparing
  std::vector<std::string> matched;
  std::vector<std::string> mismatched;  ///< "mono: computed c vs reference r"
  std::vector<std::string> missing;     ///< in the reference, absent from the result
  std::vector<std::string> extra;       ///< in the result, absent from a complete reference
  bool identical() const { return mismatched.empty() && missing.empty() && extra.empty(); }

  std::string report() const {
    std::string s = "matched " + std::to_string(matched.size()) + ", mismatched " +
                    std::to_string(mismatched.size()) + ", missing " + std::to_string(missing.size()) +
                    ", extra " + std::to_string(extra.size()) + (sign < 0 ? " (sign flipped)" : "") + "\n";
    for (const auto& x : mismatched) s += "  differs  " + x + "\n";
    for (const auto& x : missing) s += "  missing  " + x + "\n";
    for (const auto& x : extra) s += "  extra    " + x + "\n";
    return s;
  }
};

inline TermDiff term_diff(const Polynomial& computed, const Polynomial& reference, bool complete) {
  Polynomial::check_same_registry(computed, reference);
  const auto& reg = computed.registry();
  auto diff_with = [&](int sign) {
    TermDiff d;
    d.sign = sign;
    for (const auto& t : reference.terms()) {
      std::string mono = monomial_text(t.monomial, reg);
      GaussianRational want = sign > 0 ? t.coefficient : -t.coefficient;
      GaussianRational got = computed.coefficient(t.monomial);
      if (got.is_zero()) d.missing.push_back(mono + " (reference " + to_string(want) + ")");
      else if (got == want) d.matched.push_back(mono);
      else d.mismatched.push_back(mono + ": computed " + to_string(got) + " vs reference " + to_string(want));
    }
    if (complete)
      for (const auto& t : computed.terms())
        if (reference.coefficient(t.monomial).is_zero())
          d.extra.push_back(monomial_text(t.monomial, reg) + " (computed " + to_string(t.coefficient) + ")");
    return d;
  };
  TermDiff plus = diff_with(1), minus = diff_with(-1);
  return minus.matched.size() > plus.matched.size() ? minus : plus;
}

inline Polynomial reference_degree_partial(long m) {
  VariableRegistry reg(kCartesianNames);
  std::vector<Polynomial::Term> terms;
  for (const auto& r : reference_degree_terms(m))
    terms.push_back({poly_parse(r.monomial, reg).terms()[0].monomial, GaussianRational(ExactRational(parse_bigint(r.coefficient)))});
  return Polynomial::from_terms(reg, std::move(terms));
}

}  // namespace bour::surf
