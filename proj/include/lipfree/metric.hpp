#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lipfree/rational.hpp"
#include "lipfree/seq.hpp"

namespace lipfree {

// Provenance tags. They never affect distances; builders emit them so
// verification suites can state per-point claims.
struct BasePointTag {};
struct TreeNodeTag {
  Seq node;
};
struct FarCopyTag {
  Seq node;
};
struct InfinityAtomTag {
  Rational scale;
};
struct GridAtomTag {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  Rational scale;
};
struct AmbientSampleTag {
  std::uint64_t index = 0;
};
using PointTag =
    std::variant<BasePointTag, TreeNodeTag, FarCopyTag, InfinityAtomTag, GridAtomTag,
                 AmbientSampleTag>;

// Finite pointed metric space on indices {0..n-1} with base point 0 and an
// exact rational distance matrix. Instances only exist through validate(), so
// holding a PointedMetric certifies symmetry, positivity and the triangle
// inequality.
class PointedMetric {
 public:
  static PointedMetric validate(const std::vector<std::vector<Rational>>& matrix,
                                std::vector<PointTag> tags = {}) {
    const std::size_t n = matrix.size();
    if (n == 0) throw Error(Errc::bad_input, "empty matrix");
    for (std::size_t i = 0; i < n; ++i)
      if (matrix[i].size() != n) throw Error(Errc::bad_input, "matrix is not square");
    if (!tags.empty() && tags.size() != n)
      throw Error(Errc::bad_input, "tag count does not match point count");

    // First witness in row-major order.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          if (matrix[i][i] != 0)
            throw Error(Errc::nonzero_diagonal, "d(" + std::to_string(i) + "," +
                            std::to_string(i) + ") != 0",
                        static_cast<long long>(i));
        } else {
          if (matrix[i][j] != matrix[j][i])
            throw Error(Errc::asymmetric,
                        "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" +
                            std::to_string(j) + "," + std::to_string(i) + ")",
                        static_cast<long long>(i), static_cast<long long>(j));
          if (matrix[i][j] <= 0)
            throw Error(Errc::zero_off_diagonal,
                        "d(" + std::to_string(i) + "," + std::to_string(j) + ") <= 0",
                        static_cast<long long>(i), static_cast<long long>(j));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (matrix[i][k] > matrix[i][j] + matrix[j][k])
            throw Error(Errc::triangle_violation,
                        "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
                            std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                            std::to_string(j) + "," + std::to_string(k) + ")",
                        static_cast<long long>(i), static_cast<long long>(j),
                        static_cast<long long>(k));

    std::vector<Rational> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(matrix[i][j]);
    return PointedMetric(n, std::move(flat), std::move(tags));
  }

  std::size_t size() const { return n_; }
  const Rational& d(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  bool has_tags() const { return !tags_.empty(); }
  const std::vector<PointTag>& tags() const { return tags_; }
  const PointTag& tag(std::size_t i) const { return tags_.at(i); }

  Rational diameter() const {
    Rational best(0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (d(i, j) > best) best = d(i, j);
    return best;
  }

 private:
  PointedMetric(std::size_t n, std::vector<Rational> dist, std::vector<PointTag> tags)
      : n_(n), dist_(std::move(dist)), tags_(std::move(tags)) {}

  std::size_t n_ = 0;
  std::vector<Rational> dist_;
  std::vector<PointTag> tags_;
};

// Submatrix on the index set `subset` (sorted, unique, containing 0); indices
// are relabeled in increasing order and tags carried over.
inline PointedMetric restrict(const PointedMetric& m, const std::vector<std::size_t>& subset) {
  bool has_base = false;
  for (std::size_t i : subset) {
    if (i >= m.size()) throw Error(Errc::bad_input, "index out of range");
    if (i == 0) has_base = true;
  }
  if (!has_base) throw Error(Errc::base_point_missing, "index set must contain 0");
  std::vector<std::size_t> s(subset);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(Errc::bad_input, "duplicate index");

  const std::size_t k = s.size();
  std::vector<std::vector<Rational>> matrix(k, std::vector<Rational>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) matrix[a][b] = m.d(s[a], s[b]);
  std::vector<PointTag> tags;
  if (m.has_tags())
    for (std::size_t a = 0; a < k; ++a) tags.push_back(m.tag(s[a]));
  return PointedMetric::validate(matrix, std::move(tags));
}

inline Rational min_separation(const PointedMetric& m) {
  if (m.size() < 2) throw Error(Errc::single_point, "need at least two points");
  Rational best = m.d(0, 1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m.d(i, j) < best) best = m.d(i, j);
  return best;
}

namespace detail {

// Branch-and-bound maximum clique in the compatibility graph
// {(i,j) : d(i,j) >= eps}. Exponential in the worst case; reserved for small n.
inline void separated_recurse(const std::vector<std::vector<bool>>& ok,
                              const std::vector<std::size_t>& candidates, std::size_t chosen,
                              std::size_t& best) {
  if (chosen + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = std::max(best, chosen);
    return;
  }
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    if (chosen + (candidates.size() - idx) <= best) return;
    std::size_t v = candidates[idx];
    std::vector<std::size_t> next;
    for (std::size_t jdx = idx + 1; jdx < candidates.size(); ++jdx)
      if (ok[v][candidates[jdx]]) next.push_back(candidates[jdx]);
    separated_recurse(ok, next, chosen + 1, best);
  }
}

}  // namespace detail

// Exact maximum size of a subset with pairwise distances >= eps.
inline std::size_t separated_set_exact(const PointedMetric& m, const Rational& eps) {
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ok[i][j] = (i != j && m.d(i, j) >= eps);
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::size_t best = 0;
  detail::separated_recurse(ok, all, 0, best);
  return best;
}

// Greedy lower bound: scan points in index order, keep a point when it is
// >= eps from everything kept so far.
inline std::size_t separated_set_greedy(const PointedMetric& m, const Rational& eps) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool good = true;
    for (std::size_t j : kept)
      if (m.d(i, j) < eps) {
        good = false;
        break;
      }
    if (good) kept.push_back(i);
  }
  return kept.size();
}

struct SeparatedSet {
  std::size_t size = 0;
  bool exact = true;  // false when only the greedy lower bound was computed
};

// Exhaustive up to 20 points, greedy lower bound beyond that.
inline SeparatedSet separated_set_size(const PointedMetric& m, const Rational& eps) {
  if (eps <= 0) throw Error(Errc::bad_input, "eps must be positive");
  if (m.size() <= 20) return {separated_set_exact(m, eps), true};
  return {separated_set_greedy(m, eps), false};
}

// Minimum of d(x,y) + d(y,z) - d(x,z) over ordered triples of distinct
// indices with d(x,y) >= eps and d(y,z) >= eps; empty when no triple
// qualifies. A positive value witnesses uniform concavity at scale eps.
inline std::optional<Rational> concavity_gap(const PointedMetric& m, const Rational& eps) {
  if (eps < 0) throw Error(Errc::bad_input, "eps must be nonnegative");
  std::optional<Rational> best;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      if (m.d(x, y) < eps) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (m.d(y, z) < eps) continue;
        Rational gap = m.d(x, y) + m.d(y, z) - m.d(x, z);
        if (!best || gap < *best) best = gap;
      }
    }
  return best;
}

}  // namespace lipfree
