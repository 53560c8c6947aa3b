#pragma once

#include <cmath>
#include <vector>

#include "lipfree/metric.hpp"

namespace lipfree {

// Brute-force reference for the free-space norm on tiny instances, used only
// for cross-validation. It enumerates every choice of n-1 constraints from
//   { f(0) = 0 } union { f(i) - f(j) = +-d(i,j) : i < j },
// solves the resulting linear system for (f(1), ..., f(n-1)) with f(0) = 0
// substituted, discards singular or infeasible solutions, and returns the
// best objective sum_i a_i f(i). Every vertex of the feasible polytope arises
// this way, so the maximum over feasible vertices is the norm.
//
// Deliberately shares no code with the simplex or flow solvers.
inline double free_norm_bruteforce(const PointedMetric& m, const std::vector<Rational>& weights) {
  const std::size_t n = m.size();
  if (weights.size() != n) throw Error(Errc::bad_input, "weight count mismatch");
  if (n == 1) return 0.0;
  const std::size_t vars = n - 1;  // f(1), ..., f(n-1)

  struct Constraint {
    std::size_t i, j;  // f(i) - f(j) = c; i == j == 0 encodes the trivial f(0) = 0 row
    double c;
  };
  std::vector<Constraint> catalogue;
  catalogue.push_back({0, 0, 0.0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double dij = to_double(m.d(i, j));
      catalogue.push_back({i, j, dij});
      catalogue.push_back({i, j, -dij});
    }

  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = to_double(m.d(i, j));
  std::vector<double> obj(n);
  for (std::size_t i = 0; i < n; ++i) obj[i] = to_double(weights[i]);

  const double eps = 1e-9;
  bool found = false;
  double best = 0.0;

  std::vector<std::size_t> pick(vars);
  for (std::size_t v = 0; v < vars; ++v) pick[v] = v;

  auto solve_and_score = [&]() {
    // Dense Gaussian elimination with partial pivoting on the chosen rows.
    std::vector<std::vector<double>> a(vars, std::vector<double>(vars + 1, 0.0));
    for (std::size_t r = 0; r < vars; ++r) {
      const Constraint& con = catalogue[pick[r]];
      if (con.i == 0 && con.j == 0) continue;  // trivial row, leaves the system rank-deficient
      if (con.i > 0) a[r][con.i - 1] += 1.0;
      if (con.j > 0) a[r][con.j - 1] -= 1.0;
      a[r][vars] = con.c;
    }
    for (std::size_t col = 0; col < vars; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < vars; ++r)
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      if (std::abs(a[piv][col]) < 1e-9) return;  // singular choice
      std::swap(a[col], a[piv]);
      for (std::size_t r = 0; r < vars; ++r) {
        if (r == col) continue;
        double factor = a[r][col] / a[col][col];
        if (factor == 0.0) continue;
        for (std::size_t c = col; c <= vars; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    std::vector<double> f(n, 0.0);
    for (std::size_t v = 0; v < vars; ++v) f[v + 1] = a[v][vars] / a[v][v];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(f[i] - f[j]) > dist[i * n + j] + eps) return;  // infeasible vertex
    double value = 0.0;
    for (std::size_t i = 1; i < n; ++i) value += obj[i] * f[i];
    if (!found || value > best) best = value;
    found = true;
  };

  // Walk all combinations of `vars` catalogue indices.
  while (true) {
    solve_and_score();
    std::size_t pos = vars;
    while (pos-- > 0) {
      if (pick[pos] + (vars - pos) < catalogue.size()) {
        ++pick[pos];
        for (std::size_t q = pos + 1; q < vars; ++q) pick[q] = pick[q - 1] + 1;
        break;
      }
      if (pos == 0) {
        if (!found) throw Error(Errc::solver_failure, "no feasible vertex found");
        return best;
      }
    }
  }
}

}  // namespace lipfree
