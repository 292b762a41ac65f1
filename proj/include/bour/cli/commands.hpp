#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "bour/cli/config.hpp"
#include "bour/cli/mesh.hpp"
#include "bour/surfaces.hpp"

namespace bour::cli {

namespace detail {

inline long integer_m(const RunConfig& c) { return surf::SurfaceIndex::parse(c.m).symbolic_m(); }

inline void write_result(const RunConfig& c, const elim::ImplicitResult& r) {
  if (c.output.empty()) return;
  write_poly_file(c.output, r.polynomial);
  std::filesystem::path meta = c.output;
  meta += ".meta";
  auto os = open_output(meta);
  os << r.meta_text();
}

inline std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

inline void print_result(std::ostream& out, const std::string& what, const elim::ImplicitResult& r) {
  out << what << ": " << r.total_degree << "\n"
      << "method: " << elim::to_string(r.method) << "\n"
      << "terms: " << r.polynomial.size() << "\n"
      << "elapsed_s: " << seconds(r.elapsed_seconds) << "\n"
      << "certificate: " << (r.certificate.is_zero() ? "zero" : "NONZERO") << "\n";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Mesh of the associated-family surface on the configured (r, theta) grid.
/// A ".csv" output path selects CSV, anything else OBJ.
inline int cmd_generate(RunConfig c, std::ostream& out) {
  c.validate();
  auto idx = surf::SurfaceIndex::parse(c.m, c.alpha);
  if (c.output.empty()) throw InputError("generate needs an output path");
  PolarGrid grid = sample_surface(idx, c.r0, c.r1, c.nr, c.theta0, c.theta1, c.ntheta);
  auto os = open_output(c.output);
  if (c.output.extension() == ".csv") {
    write_csv(os, grid);
  } else {
    write_obj(os, grid, "bour surface m=" + idx.text() + " alpha=" + format_coord(c.alpha));
  }
  if (!os) throw InputError("write failed for '" + c.output.string() + "'");
  out << "wrote " << grid.points.size() << " vertices to " << c.output.string() << "\n";
  return kOk;
}

/// Cartesian implicit equation and degree.
inline int cmd_implicitize(RunConfig c, std::ostream& out) {
  c.validate();
  const long m = detail::integer_m(c);
  surf::SurfaceJobOptions o{c.allow_long, c.implicit_options()};
  auto r = surf::surface_degree(m, o);
  detail::write_result(c, r);
  detail::print_result(out, "degree", r);
  out << "formula (m+1)^2: " << surf::ribaucour_degree(m)
      << (surf::ribaucour_degree(m) == r.total_degree ? " (agrees)" : " (DIFFERS)") << "\n";
  if (auto count = surf::reference_degree_term_count(m)) {
    out << "reference comparison (quoted leading terms, " << *count << " terms in total):\n";
    out << "  " << surf::term_diff(r.polynomial, surf::reference_degree_partial(m), false).report();
    out << "  term count " << r.polynomial.size() << (r.polynomial.size() == *count ? " (agrees)" : " (differs)")
        << "\n";
  }
  if (c.output.empty()) out << "vars: x,y,z\n" << canonical_text(r.polynomial) << "\n";
  return r.certificate.is_zero() ? kOk : kCheckFailed;
}

/// Tangential implicit equation and class.
inline int cmd_class(RunConfig c, std::ostream& out) {
  c.validate();
  const long m = detail::integer_m(c);
  surf::SurfaceJobOptions o{c.allow_long, c.implicit_options()};
  auto r = surf::surface_class(m, o);
  detail::write_result(c, r);
  detail::print_result(out, "class", r);
  out << "formula 2q(p+q): " << surf::ribaucour_class(m, 1)
      << (surf::ribaucour_class(m, 1) == r.total_degree ? " (agrees)" : " (DIFFERS)") << "\n";
  if (auto ref = surf::reference_tangential(m)) {
    out << "reference comparison (printed tangential equation):\n  "
        << surf::term_diff(r.polynomial, *ref, true).report();
  }
  if (c.output.empty()) out << "vars: ubar,vbar,wbar\n" << canonical_text(r.polynomial) << "\n";
  return r.certificate.is_zero() ? kOk : kCheckFailed;
}

/// Certificate suite over the configured m values.
inline VerifyReport run_verify(const RunConfig& c) {
  VerifyReport rep;
  const std::vector<ExactRational> radii{make_rational(1, 2), make_rational(1), make_rational(2)};
  for (long m : c.m_list) {
    surf::require_symbolic_m(m);
    const std::string tag = "m=" + std::to_string(m) + " ";
    auto curve = surf::bour_curve(m);
    rep.add(tag + "isotropy", surf::isotropy_certificate(curve).is_zero());

    auto wd = surf::weierstrass_data_from_curve(curve);
    bool recovered = wd.F == surf::zeta_power(m - 2) && wd.G == surf::zeta_power(1);
    rep.add(tag + "weierstrass data", recovered, "F=" + canonical_text(wd.F) + " G=" + canonical_text(wd.G));
    rep.add(tag + "weierstrass patch", surf::weierstrass_patch(wd) == curve);

    auto s = surf::cartesian_surface(m);
    auto ff = surf::fundamental_forms(s);
    rep.add(tag + "conformal", (ff.E - ff.G1).is_zero() && ff.F1.is_zero());
    rep.add(tag + "minimal", surf::minimality_certificate(s).is_zero());
    rep.add(tag + "gauss map parallel", surf::is_zero(surf::gauss_parallel_certificate(s)));
    GaussianRational orient = eval(dot(surf::unnormalized_normal(s), surf::gauss_numerator()), {1, 1});
    rep.add(tag + "orientation at (1,1)", orient.re() > 0, "dot=" + to_string(orient));
    bool branch = surf::has_branch_point_at_origin(s);
    rep.add(tag + "branch point", branch == (m >= 3), branch ? "branch point at 0" : "no branch point");

    bool quadric = true;
    for (const auto& r0 : radii) {
      ExactRational k = surf::quadric_coefficient(m);
      if (c.inject_quadric_fault) k = -k;
      quadric = quadric && surf::quadric_residual(m, r0, k).is_zero();
    }
    rep.add(tag + "quadric of revolution", quadric, c.inject_quadric_fault ? "fault injected" : "r0 in {1/2,1,2}");

    if (m <= 8) {
      auto P = surf::support_function(m);
      rep.add(tag + "tangent plane identity", surf::tangent_plane_residual(m, P).is_zero());
    }

    auto ifd = surf::integral_free_components(surf::phi_bour(m));
    rep.add(tag + "integral-free curve", surf::as_curve(ifd) == curve);
    rep.add(tag + "integral-free round trip", surf::phi_from_components(ifd.f1, ifd.f2, ifd.f3) == ifd.phi);
    const int d2 = (ifd.phi * ifd.phi).total_degree();
    rep.add(tag + "deg(phi^2) = 2m+2 = class formula", d2 == 2 * m + 2 && d2 == surf::ribaucour_class(m, 1),
            "deg=" + std::to_string(d2));

    double K = surf::total_curvature_numeric(m, 1000.0, 4096, 64);
    double rel = std::fabs(K + 4 * std::numbers::pi) / (4 * std::numbers::pi);
    std::ostringstream w;
    w << "K=" << std::setprecision(10) << K;
    rep.add(tag + "total curvature -4pi", rel < 1e-3, w.str());

    if (m == 3) {
      rep.add(tag + "self-intersection ray u=0", surf::is_zero(surf::ray_certificate(s)));
      rep.add(tag + "2pi/3 rotational symmetry",
              surf::rotate_parameters_third(s, 1) == surf::rotate_space_third(s, 1) &&
                  surf::rotate_parameters_third(s, 2) == surf::rotate_space_third(s, 2));
    }
  }
  return rep;
}

inline int cmd_verify(RunConfig c, std::ostream& out) {
  VerifyReport rep = run_verify(c);
  rep.print(out);
  return rep.exit_code();
}

/// Plane sections: the theta = 0 profile in the xz-plane or the r = 1
/// boundary projected to the xy-plane.
inline int cmd_curve(RunConfig c, std::ostream& out) {
  const long m = detail::integer_m(c);
  elim::ImplicitResult r;
  bool samples_ok = true;
  std::string sample_text;
  if (c.mode == "profile") {
    r = surf::profile_curve(m);
    auto [x, z] = surf::profile_parametrization(m);
    for (int k = 1; k <= 20; ++k) {
      ExactRational t = make_rational(k, 7);
      ExactRational xv = eval(x, {t}).re(), zv = eval(z, {t}).re();
      samples_ok = samples_ok && eval(r.polynomial, {xv, zv}).is_zero();
    }
    sample_text = "vanishes at r = k/7, k = 1..20: " + detail::yes_no(samples_ok);
  } else if (c.mode == "deltoid") {
    r = surf::boundary_curve(m, c.implicit_options());
    auto map = surf::boundary_parametrization(m);
    for (int k = 0; k < 12; ++k) {
      auto [cv, sv] = surf::rational_circle_point(make_rational(k - 5, 3));
      std::vector<ExactRational> pt{cv, sv};
      ExactRational xv = map[0].eval(pt).re(), yv = map[1].eval(pt).re();
      samples_ok = samples_ok && eval(r.polynomial, {xv, yv}).is_zero();
    }
    sample_text = "vanishes at 12 rational boundary points: " + detail::yes_no(samples_ok);
  } else {
    throw InputError("unknown curve mode '" + c.mode + "' (expected profile or deltoid)");
  }
  detail::write_result(c, r);
  detail::print_result(out, "degree", r);
  out << sample_text << "\n";
  if (c.mode == "profile" && m == 3)
    out << "reference comparison (printed profile equation):\n  "
        << surf::term_diff(r.polynomial, surf::reference_profile_printed(), true).report();
  out << "vars: " << r.polynomial.registry().joined() << "\n" << canonical_text(r.polynomial) << "\n";
  return r.certificate.is_zero() && samples_ok ? kOk : kCheckFailed;
}

inline int cmd_integral_free(RunConfig c, std::ostream& out) {
  const long m = detail::integer_m(c);
  auto phi = surf::phi_bour(m);
  auto d = surf::integral_free_components(phi);
  bool round_trip = surf::phi_from_components(d.f1, d.f2, d.f3) == phi;
  bool curve = surf::as_curve(d) == surf::bour_curve(m);
  const int d2 = (phi * phi).total_degree();
  out << "phi = " << canonical_text(phi) << "\n"
      << "f1 = " << canonical_text(d.f1) << "\n"
      << "f2 = " << canonical_text(d.f2) << "\n"
      << "f3 = " << canonical_text(d.f3) << "\n"
      << "round trip: " << (round_trip ? "OK" : "FAILED") << "\n"
      << "equals the curve of value m: " << detail::yes_no(curve) << "\n"
      << "deg(phi^2) = " << d2 << ", 2m+2 = " << 2 * m + 2 << ", class formula = " << surf::ribaucour_class(m, 1)
      << "\n";
  return round_trip && curve && d2 == 2 * m + 2 ? kOk : kCheckFailed;
}

inline int cmd_formulas(RunConfig c, std::ostream& out) {
  auto idx = surf::SurfaceIndex::parse(c.m);
  if (idx.kind == surf::SurfaceIndex::Kind::real) throw InputError("formulas need m as an integer or p/q");
  out << "m = " << idx.text() << "\n";
  out << "class 2q(p+q) = " << surf::ribaucour_class(idx.p, idx.q) << "\n";
  if (idx.is_integer() && idx.p >= 2) out << "degree (m+1)^2 = " << surf::ribaucour_degree(idx.p) << "\n";
  else out << "degree = n/a (no degree formula for this m)\n";
  return kOk;
}

/// Timing table for the elimination jobs.
inline int cmd_bench(RunConfig c, std::ostream& out) {
  c.validate();
  if (c.suite != "implicitize") throw InputError("unknown bench suite '" + c.suite + "' (expected implicitize)");
  struct Job {
    std::string name;
    std::function<elim::ImplicitResult()> run;
  };
  surf::SurfaceJobOptions o{c.allow_long, c.implicit_options()};
  std::vector<Job> jobs{
      {"profile m=3", [] { return surf::profile_curve(3); }},
      {"boundary m=3", [&] { return surf::boundary_curve(3, o.implicit); }},
      {"class m=2", [&] { return surf::surface_class(2, o); }},
      {"class m=3", [&] { return surf::surface_class(3, o); }},
      {"class m=4", [&] { return surf::surface_class(4, o); }},
      {"degree m=2", [&] { return surf::surface_degree(2, o); }},
      {"degree m=3", [&] { return surf::surface_degree(3, o); }},
  };
  if (c.allow_long) jobs.push_back({"degree m=4", [&] { return surf::surface_degree(4, o); }});
  out << std::left << std::setw(14) << "job" << std::setw(8) << "degree" << std::setw(8) << "terms" << std::setw(8)
      << "primes" << std::setw(10) << "pairs" << "best_s\n";
  bool ok = true;
  for (const auto& job : jobs) {
    double best = 1e300;
    elim::ImplicitResult r;
    for (std::size_t k = 0; k < c.repeat; ++k) {
      r = job.run();
      best = std::min(best, r.elapsed_seconds);
    }
    ok = ok && r.certificate.is_zero();
    out << std::left << std::setw(14) << job.name << std::setw(8) << r.total_degree << std::setw(8)
        << r.polynomial.size() << std::setw(8) << r.stats.primes_used << std::setw(10) << r.stats.pairs_processed
        << detail::seconds(best) << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace bour::cli
