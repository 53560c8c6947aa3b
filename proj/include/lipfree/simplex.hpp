#pragma once

#include <cmath>
#include <vector>

#include "lipfree/error.hpp"

namespace lipfree {

enum class LpStatus { optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  double objective = 0.0;
  std::vector<double> x;
};

// Dense primal simplex: maximize c.x subject to A x <= b, x >= 0, with
// b >= 0 so the slack basis is feasible and no phase-1 is needed. Bland's
// rule for both the entering and leaving choice: deterministic and immune to
// cycling on the degenerate rows our formulations produce.
inline LpResult simplex_maximize(const std::vector<std::vector<double>>& A,
                                 const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  const double eps = 1e-9;
  for (double bi : b)
    if (bi < 0) throw Error(Errc::solver_failure, "negative right-hand side");

  // Tableau rows 0..m-1 are constraints, row m is the objective. Columns
  // 0..n-1 structural, n..n+m-1 slack, last column the right-hand side.
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(n + m + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t col = 0; col < n; ++col) t[r][col] = A[r][col];
    t[r][n + r] = 1.0;
    t[r][n + m] = b[r];
    basis[r] = n + r;
  }
  for (std::size_t col = 0; col < n; ++col) t[m][col] = -c[col];

  const std::size_t max_pivots = 50000 + 200 * (m + n);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_pivots) throw Error(Errc::solver_failure, "pivot limit exceeded");

    std::size_t enter = n + m;
    for (std::size_t col = 0; col < n + m; ++col)
      if (t[m][col] < -eps) {
        enter = col;
        break;
      }
    if (enter == n + m) break;  // optimal

    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= eps) continue;
      double ratio = t[r][n + m] / t[r][enter];
      if (leave == m || ratio < best_ratio - eps ||
          (ratio < best_ratio + eps && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == m) return {LpStatus::unbounded, 0.0, {}};

    double piv = t[leave][enter];
    for (std::size_t col = 0; col <= n + m; ++col) t[leave][col] /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      double factor = t[r][enter];
      if (factor == 0.0) continue;
      for (std::size_t col = 0; col <= n + m; ++col) t[r][col] -= factor * t[leave][col];
    }
    basis[leave] = enter;
  }

  LpResult result;
  result.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) result.x[basis[r]] = t[r][n + m];
  result.objective = t[m][n + m];
  return result;
}

}  // namespace lipfree
