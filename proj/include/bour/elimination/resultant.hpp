#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "bour/core/calculus.hpp"
#include "bour/core/gcd.hpp"

namespace bour::elim {

/// Sylvester matrix of p and q in `var`: deg_q rows of p's coefficients
/// followed by deg_p rows of q's, highest power in the first column.
inline std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                             std::string_view var) {
  Polynomial::check_same_registry(p, q);
  const std::size_t v = p.registry().require(var);
  const std::size_t m = p.degree_in(v), n = q.degree_in(v);
  if (m == 0 || n == 0) throw InputError("resultant needs positive degree in '" + std::string(var) + "'");
  auto pc = coefficients_in(p, v);  // pc[k] is the coefficient of var^k
  auto qc = coefficients_in(q, v);
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> rows(size, std::vector<Polynomial>(size, Polynomial(p.registry())));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) rows[r][r + m - k] = pc[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) rows[n + r][r + n - k] = qc[k];
  return rows;
}

/// Fraction-free (Bareiss) determinant. Every division is exact.
inline Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> a, const VariableRegistry& reg) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial(reg, GaussianRational(1));
  bool negate = false;
  Polynomial prev(reg, GaussianRational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(reg);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev.is_constant() ? t.divided(prev.terms()[0].coefficient) : exact_divide(t, prev);
      }
      a[i][k] = Polynomial(reg);
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? -det : det;
}

/// Determinant of the Sylvester matrix with p's rows first, so that
/// resultant(x - a, x - b, x) = a - b.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var) {
  return bareiss_determinant(sylvester_matrix(p, q, var), p.registry());
}

}  // namespace bour::elim
