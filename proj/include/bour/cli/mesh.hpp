#pragma once

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bour/surfaces/surface.hpp"

namespace bour::cli {

/// Samples on an inclusive (r, theta) grid, stored row-major (r outer).
struct PolarGrid {
  std::size_t nr = 0, ntheta = 0;
  std::vector<double> r, theta;
  std::vector<std::array<double, 3>> points;

  const std::array<double, 3>& at(std::size_t i, std::size_t j) const { return points[i * ntheta + j]; }
};

inline std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a + (b - a) * double(k) / double(n - 1);
  out.back() = b;
  return out;
}

inline PolarGrid sample_surface(const surf::SurfaceIndex& idx, double r0, double r1, std::size_t nr, double t0,
                                double t1, std::size_t ntheta) {
  if (nr < 2 || ntheta < 2) throw InputError("grid must be at least 2 x 2");
  PolarGrid g;
  g.nr = nr;
  g.ntheta = ntheta;
  g.r = linspace(r0, r1, nr);
  g.theta = linspace(t0, t1, ntheta);
  g.points.reserve(nr * ntheta);
  for (double r : g.r)
    for (double t : g.theta) g.points.push_back(surf::polar_eval(idx, r, t));
  return g;
}

/// %.9g with negative zero printed as 0.
inline std::string format_coord(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

/// Wavefront OBJ: one `v` line per sample, then quads `f a b c d` over
/// neighbouring samples (1-based, row-major). Faces touching the branch
/// point or a closed seam may repeat vertices.
inline void write_obj(std::ostream& os, const PolarGrid& g, const std::string& comment = {}) {
  if (!comment.empty()) os << "# " << comment << "\n";
  for (const auto& p : g.points)
    os << "v " << format_coord(p[0]) << " " << format_coord(p[1]) << " " << format_coord(p[2]) << "\n";
  auto id = [&](std::size_t i, std::size_t j) { return i * g.ntheta + j + 1; };
  for (std::size_t i = 0; i + 1 < g.nr; ++i)
    for (std::size_t j = 0; j + 1 < g.ntheta; ++j)
      os << "f " << id(i, j) << " " << id(i, j + 1) << " " << id(i + 1, j + 1) << " " << id(i + 1, j) << "\n";
}

inline void write_csv(std::ostream& os, const PolarGrid& g) {
  os << "r,theta,x,y,z\n";
  for (std::size_t i = 0; i < g.nr; ++i)
    for (std::size_t j = 0; j < g.ntheta; ++j) {
      const auto& p = g.at(i, j);
      os << format_coord(g.r[i]) << "," << format_coord(g.theta[j]) << "," << format_coord(p[0]) << ","
         << format_coord(p[1]) << "," << format_coord(p[2]) << "\n";
    }
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write '" + path.string() + "'");
  return os;
}

}  // namespace bour::cli
