// Builds the m = 3 surface, checks it, and computes its class.

#include <iostream>

#include "bour/core.hpp"
#include "bour/elimination.hpp"
#include "bour/surfaces.hpp"

int main() {
  using namespace bour;
  using namespace bour::surf;

  const long m = 3;
  MinimalCurve c = bour_curve(m);
  std::cout << "x(zeta) = " << canonical_text(c.x) << "\n";
  std::cout << "isotropic: " << (isotropy_certificate(c).is_zero() ? "yes" : "no") << "\n";

  WeierstrassData d = weierstrass_data_from_curve(c);
  std::cout << "F = " << canonical_text(d.F) << ", G = " << canonical_text(d.G) << "\n";

  RealParamSurface s = cartesian_surface(m);
  std::cout << "z(u,v) = " << canonical_text(s.z) << "\n";
  std::cout << "minimal: " << (minimality_certificate(s).is_zero() ? "yes" : "no") << "\n";

  auto p = polar_eval(SurfaceIndex::integer(m), 1.0, 0.0);
  std::cout << "X(1, 0) = (" << p[0] << ", " << p[1] << ", " << p[2] << ")\n";

  auto cls = surface_class(m);
  std::cout << "class " << cls.total_degree << " (formula " << ribaucour_class(m, 1) << "), "
            << cls.polynomial.size() << " terms\n";
  return 0;
}
