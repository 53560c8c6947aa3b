#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "lipfree/seq.hpp"

namespace lipfree {

// Prefix closure test: every nonempty node's parent must be present.
inline bool is_tree(const std::vector<Seq>& nodes) {
  std::set<Seq> index(nodes.begin(), nodes.end());
  for (const Seq& s : nodes)
    if (!s.empty() && !index.count(s.parent())) return false;
  return true;
}

// Finite prefix-closed set of sequences. Nodes are kept in rank order, which
// is also the canonical serialization order.
class FinTree {
 public:
  FinTree() = default;

  static FinTree from_nodes(std::vector<Seq> nodes) {
    if (!is_tree(nodes)) throw Error(Errc::bad_input, "node set is not prefix-closed");
    FinTree t;
    t.index_.insert(nodes.begin(), nodes.end());
    t.sort_nodes();
    return t;
  }

  // Prefix closure of arbitrary seeds; contains the empty sequence even when
  // seeds is empty, so the result is never the empty tree.
  static FinTree closure(const std::vector<Seq>& seeds) {
    FinTree t;
    t.index_.insert(Seq{});
    for (const Seq& s : seeds)
      for (std::size_t len = 0; len <= s.size(); ++len) t.index_.insert(s.prefix(len));
    t.sort_nodes();
    return t;
  }

  bool contains(const Seq& s) const { return index_.count(s) != 0; }
  std::size_t size() const { return index_.size(); }
  const std::vector<Seq>& nodes() const { return sorted_; }

  std::size_t max_depth() const {
    std::size_t d = 0;
    for (const Seq& s : sorted_) d = std::max(d, s.size());
    return d;
  }

  // Maximal chains, i.e. root-to-leaf paths, in rank order of their leaves.
  std::vector<std::vector<Seq>> chains() const {
    std::set<Seq> parents;
    for (const Seq& s : sorted_)
      if (!s.empty()) parents.insert(s.parent());
    std::vector<std::vector<Seq>> out;
    for (const Seq& leaf : sorted_) {
      if (parents.count(leaf)) continue;
      std::vector<Seq> chain;
      for (std::size_t len = 0; len <= leaf.size(); ++len) chain.push_back(leaf.prefix(len));
      out.push_back(std::move(chain));
    }
    return out;
  }

 private:
  void sort_nodes() {
    std::vector<std::pair<BigInt, Seq>> keyed;
    keyed.reserve(index_.size());
    for (const Seq& s : index_) keyed.emplace_back(rank(s), s);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    sorted_.clear();
    for (auto& [r, s] : keyed) sorted_.push_back(std::move(s));
  }

  std::set<Seq> index_;
  std::vector<Seq> sorted_;
};

// Weighted prefix embedding into finitely supported vectors indexed by
// sequences: s maps to sum over prefixes r of s of 2^{-|r|} e_r.
inline std::map<Seq, Rational> omega_embed(const Seq& s) {
  std::map<Seq, Rational> v;
  for (std::size_t len = 0; len <= s.size(); ++len)
    v.emplace(s.prefix(len), pow2(-static_cast<long>(len)));
  return v;
}

// Sup-norm distance between finitely supported vectors.
inline Rational linf_distance(const std::map<Seq, Rational>& a, const std::map<Seq, Rational>& b) {
  Rational best(0);
  auto consider = [&](const Rational& x) {
    Rational ax = rational_abs(x);
    if (ax > best) best = ax;
  };
  for (const auto& [key, val] : a) {
    auto it = b.find(key);
    consider(it == b.end() ? val : Rational(val - it->second));
  }
  for (const auto& [key, val] : b)
    if (!a.count(key)) consider(val);
  return best;
}

// Tree metric induced by the prefix embedding: 0 on the diagonal and
// 2^{-|s^t|-1} for distinct s, t, where s^t is the longest common prefix.
inline Rational rho(const Seq& s, const Seq& t) {
  if (s == t) return Rational(0);
  return pow2(-static_cast<long>(meet_length(s, t)) - 1);
}

}  // namespace lipfree
