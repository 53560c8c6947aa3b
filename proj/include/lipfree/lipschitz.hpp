#pragma once

#include <algorithm>
#include <vector>

#include "lipfree/metric.hpp"

namespace lipfree {

// Real-valued function on the points of a metric, vanishing at the base
// point. Values are exact rationals; solvers that work in doubles carry their
// witnesses as plain vectors instead.
struct LipFunction {
  std::vector<Rational> values;
};

// Optimal Lipschitz constant max |f(i)-f(j)| / d(i,j). Zero for a single
// point.
inline Rational lip_constant(const PointedMetric& m, const LipFunction& f) {
  if (f.values.size() != m.size()) throw Error(Errc::bad_input, "value count mismatch");
  if (f.values[0] != 0) throw Error(Errc::base_not_zero, "f(0) must be 0");
  Rational best(0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Rational ratio = rational_abs(f.values[i] - f.values[j]) / m.d(i, j);
      if (ratio > best) best = ratio;
    }
  return best;
}

inline double lip_constant(const PointedMetric& m, const std::vector<double>& values) {
  if (values.size() != m.size()) throw Error(Errc::bad_input, "value count mismatch");
  double best = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      double ratio = std::abs(values[i] - values[j]) / to_double(m.d(i, j));
      best = std::max(best, ratio);
    }
  return best;
}

enum class ExtensionForm { lower, upper };

// McShane extension of g from the subset S (sorted indices containing 0,
// values parallel to S, g(0) = 0) to the whole space, with prescribed
// constant L >= Lip(g):
//   lower: f(x) = min_{y in S} g(y) + L d(x,y)
//   upper: f(x) = max_{y in S} g(y) - L d(x,y)
// Both agree with g on S and are L-Lipschitz; upper <= lower pointwise, and
// every L-Lipschitz extension of g sits between them.
inline LipFunction mcshane_extend(const PointedMetric& m, const std::vector<std::size_t>& subset,
                                  const std::vector<Rational>& g, const Rational& bound,
                                  ExtensionForm form) {
  if (subset.size() != g.size()) throw Error(Errc::bad_input, "subset/value count mismatch");
  std::vector<std::size_t> order(subset.size());
  for (std::size_t p = 0; p < subset.size(); ++p) order[p] = p;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return subset[a] < subset[b]; });

  bool has_base = false;
  for (std::size_t p = 0; p < subset.size(); ++p) {
    if (subset[p] >= m.size()) throw Error(Errc::bad_input, "index out of range");
    if (subset[p] == 0) {
      has_base = true;
      if (g[p] != 0) throw Error(Errc::base_not_zero, "g(0) must be 0");
    }
  }
  if (!has_base) throw Error(Errc::base_point_missing, "subset must contain 0");

  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] == subset[b]) throw Error(Errc::bad_input, "duplicate index in subset");
      if (rational_abs(g[a] - g[b]) > bound * m.d(subset[a], subset[b]))
        throw Error(Errc::constant_too_small, "L is below the Lipschitz constant of g",
                    static_cast<long long>(subset[a]), static_cast<long long>(subset[b]));
    }

  LipFunction f;
  f.values.resize(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    bool first = true;
    Rational acc;
    for (std::size_t p : order) {
      Rational candidate = form == ExtensionForm::lower ? g[p] + bound * m.d(x, subset[p])
                                                        : g[p] - bound * m.d(x, subset[p]);
      if (first || (form == ExtensionForm::lower ? candidate < acc : candidate > acc)) {
        acc = candidate;
        first = false;
      }
    }
    f.values[x] = acc;
  }
  return f;
}

}  // namespace lipfree
