#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// central finite differences for derivatives, brute-force Jacobi sums,
// Gaussian-elimination rank, and a grammar-based random expression generator.

#include <cmath>
#include <random>
#include <vector>

#include "hamcat/algebra.hpp"
#include "hamcat/expr.hpp"

namespace oracles {

inline double finite_difference(const hamcat::Expr& e, const hamcat::Point& pt,
                                const std::string& var, double h = 1e-6) {
  hamcat::Point hi = pt, lo = pt;
  hi.vars[var] += h;
  lo.vars[var] -= h;
  return (hamcat::evaluate(e, hi) - hamcat::evaluate(e, lo)) / (2.0 * h);
}

// Brute-force max |Jacobi sum| over all 256 index tuples.
inline double brute_jacobi(const hamcat::LieAlgebra& alg,
                           const std::map<std::string, double>& params) {
  hamcat::Point pt;
  pt.params = alg.resolve_params(params);
  double f[5][5][5];
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) f[i][j][k] = hamcat::evaluate(alg.f(i, j, k), pt);
  double worst = 0.0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          double s = 0.0;
          for (int m = 1; m <= 4; ++m)
            s += f[i][j][m] * f[m][k][l] + f[j][k][m] * f[m][i][l] +
                 f[k][i][m] * f[m][j][l];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

// Row-echelon rank with partial pivoting; independent of the SVD route.
inline int gauss_rank(std::vector<std::vector<double>> a, double rel_tol = 1e-8) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  double scale = 0.0;
  for (const auto& r : a)
    for (double v : r) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  double tol = rel_tol * scale;
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    for (std::size_t r = row; r < rows; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= tol) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      double m = a[r][col] / a[row][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= m * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Random expressions over the given variables; poly_only restricts to sums,
// products and small integer powers.
inline hamcat::Expr random_expr(std::mt19937_64& rng,
                                const std::vector<std::string>& vars, int depth,
                                bool poly_only = false) {
  using hamcat::Expr;
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth <= 0 || pick(100) < 30) {
    if (pick(100) < 30) return Expr::constant(coef(rng));
    return Expr::variable(vars[static_cast<std::size_t>(pick(static_cast<int>(vars.size())))]);
  }
  int choice = pick(poly_only ? 4 : 8);
  Expr a = random_expr(rng, vars, depth - 1, poly_only);
  Expr b = random_expr(rng, vars, depth - 1, poly_only);
  switch (choice) {
    case 0:
      return a + b;
    case 1:
      return a - b;
    case 2:
      return a * b;
    case 3:
      return hamcat::pow(a, Expr::constant(1 + pick(2)));
    case 4:
      return a / (b * b + Expr::constant(1.5));
    case 5:
      return hamcat::sin(a) + hamcat::cos(b);
    case 6:
      return hamcat::exp(a * Expr::constant(0.3));
    default:
      return hamcat::ln(hamcat::abs(a) + Expr::constant(1.2));
  }
}

}  // namespace oracles
