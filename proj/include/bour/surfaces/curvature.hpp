#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "bour/core/calculus.hpp"
#include "bour/surfaces/curve.hpp"

namespace bour::surf {

/// Integral of the Gauss-map area form -4|G'|^2/(1+|G|^2)^2 over the disk
/// |zeta| <= R. Composite Simpson in t with r = R t^2 (which clusters nodes
/// near the origin, where the integrand lives), periodic trapezoid in theta.
inline double total_curvature_numeric(const WeierstrassData& data, double R, std::size_t nr, std::size_t ntheta) {
  if (!(R > 0)) throw InputError("R must be positive");
  if (nr < 16 || ntheta < 16) throw InputError("grid sizes must be at least 16");
  if (nr % 2) ++nr;
  const Polynomial& G = data.G;
  const Polynomial dG = derivative(G, G.registry().name(0));
  const double two_pi = 2.0 * std::numbers::pi;
  auto density = [&](double r, double theta) {
    std::complex<double> z = std::polar(r, theta);
    std::complex<double> g = eval_complex(G, std::span<const std::complex<double>>(&z, 1));
    std::complex<double> dg = eval_complex(dG, std::span<const std::complex<double>>(&z, 1));
    double a = 1.0 + std::norm(g);
    return -4.0 * std::norm(dg) / (a * a);
  };
  double total = 0.0;
  for (std::size_t j = 0; j < ntheta; ++j) {
    const double theta = two_pi * double(j) / double(ntheta);
    double line = 0.0;
    for (std::size_t i = 0; i <= nr; ++i) {
      const double t = double(i) / double(nr);
      const double r = R * t * t;
      const double w = (i == 0 || i == nr) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      line += w * density(r, theta) * r * 2.0 * R * t;
    }
    total += line / (3.0 * double(nr));
  }
  return total * two_pi / double(ntheta);
}

inline double total_curvature_numeric(long m, double R, std::size_t nr, std::size_t ntheta) {
  return total_curvature_numeric(weierstrass_data_from_curve(bour_curve(m)), R, nr, ntheta);
}

/// Closed form of the same integral for G = zeta: -4 pi R^2 / (1 + R^2).
inline double total_curvature_disk_exact(double R) { return -4.0 * std::numbers::pi * R * R / (1.0 + R * R); }

}  // namespace bour::surf
