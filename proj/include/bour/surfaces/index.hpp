#pragma once

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>

#include "bour/core/error.hpp"

namespace bour::surf {

/// Exponent m of the family together with the associated-family phase.
/// Symbolic code paths need an integer m >= 2; numeric ones accept any
/// real m outside {-1, 0, 1}.
struct SurfaceIndex {
  enum class Kind { integer, rational, real };

  Kind kind = Kind::integer;
  long p = 3;  ///< numerator (the value itself when integer)
  long q = 1;  ///< positive denominator, gcd(p, q) = 1
  double real_value = 3.0;
  double alpha = 0.0;

  static SurfaceIndex integer(long m, double alpha = 0.0) { return make(Kind::integer, m, 1, double(m), alpha); }

  static SurfaceIndex rational(long p, long q, double alpha = 0.0) {
    if (q <= 0) throw InputError("m = p/q needs q >= 1");
    if (std::gcd(p, q) != 1) throw InputError("m = p/q must be in lowest terms");
    if (q == 1) return integer(p, alpha);
    return make(Kind::rational, p, q, double(p) / double(q), alpha);
  }

  static SurfaceIndex real(double m, double alpha = 0.0) {
    if (!std::isfinite(m)) throw InputError("m must be finite");
    if (m == std::floor(m) && std::fabs(m) < 1e15) return integer(static_cast<long>(m), alpha);
    return make(Kind::real, 0, 1, m, alpha);
  }

  /// Accepts "3", "-2", "1/2" or a decimal such as "2.5".
  static SurfaceIndex parse(std::string_view text, double alpha = 0.0) {
    std::string s(text);
    auto fail = [&]() -> SurfaceIndex { throw InputError("cannot read m from '" + s + "'"); };
    if (s.empty()) return fail();
    if (auto slash = s.find('/'); slash != std::string::npos) {
      char* end = nullptr;
      long p = std::strtol(s.c_str(), &end, 10);
      if (end != s.c_str() + slash) return fail();
      const char* qs = s.c_str() + slash + 1;
      long q = std::strtol(qs, &end, 10);
      if (end == qs || *end) return fail();
      return rational(p, q, alpha);
    }
    char* end = nullptr;
    long m = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() && !*end) return integer(m, alpha);
    double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end) return fail();
    return real(d, alpha);
  }

  bool is_integer() const noexcept { return kind == Kind::integer; }
  double value() const noexcept { return real_value; }

  /// Integer m >= 2, as needed by every exact construction.
  long symbolic_m() const {
    if (!is_integer() || p < 2) throw InputError("symbolic constructions need an integer m >= 2, got " + text());
    return p;
  }

  std::string text() const {
    switch (kind) {
      case Kind::integer: return std::to_string(p);
      case Kind::rational: return std::to_string(p) + "/" + std::to_string(q);
      case Kind::real: break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", real_value);
    return buf;
  }

 private:
  static SurfaceIndex make(Kind kind, long p, long q, double value, double alpha) {
    if (value == -1.0 || value == 0.0 || value == 1.0)
      throw InputError("m must not be -1, 0 or 1: the curve divides by m - 1, m and m + 1");
    if (!std::isfinite(alpha)) throw InputError("alpha must be finite");
    SurfaceIndex s;
    s.kind = kind;
    s.p = p;
    s.q = q;
    s.real_value = value;
    s.alpha = alpha;
    return s;
  }
};

/// Validates an integer m for the exact constructions.
inline long require_symbolic_m(long m) {
  return SurfaceIndex::integer(m).symbolic_m();
}

}  // namespace bour::surf
