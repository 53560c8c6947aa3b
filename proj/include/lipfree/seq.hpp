#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lipfree/error.hpp"
#include "lipfree/rational.hpp"

namespace lipfree {

// Finite (possibly empty) sequence of naturals.
struct Seq {
  std::vector<std::uint64_t> entries;

  Seq() = default;
  Seq(std::initializer_list<std::uint64_t> init) : entries(init) {}
  explicit Seq(std::vector<std::uint64_t> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  std::uint64_t operator[](std::size_t i) const { return entries[i]; }

  Seq child(std::uint64_t next) const {
    Seq c(*this);
    c.entries.push_back(next);
    return c;
  }

  Seq prefix(std::size_t len) const {
    return Seq(std::vector<std::uint64_t>(entries.begin(), entries.begin() + len));
  }

  Seq parent() const {
    if (empty()) throw Error(Errc::bad_input, "the empty sequence has no parent");
    return prefix(size() - 1);
  }

  auto operator<=>(const Seq&) const = default;
};

inline std::string seq_to_string(const Seq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

// s is an initial segment of t (allowing s == t).
inline bool is_prefix(const Seq& s, const Seq& t) {
  if (s.size() > t.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != t[i]) return false;
  return true;
}

inline bool comparable(const Seq& s, const Seq& t) { return is_prefix(s, t) || is_prefix(t, s); }

inline bool incomparable(const Seq& s, const Seq& t) { return !comparable(s, t); }

// Length of the longest common prefix.
inline std::size_t meet_length(const Seq& s, const Seq& t) {
  std::size_t m = std::min(s.size(), t.size());
  std::size_t i = 0;
  while (i < m && s[i] == t[i]) ++i;
  return i;
}

// Longest common prefix. For comparable inputs this is the shorter sequence.
inline Seq meet(const Seq& s, const Seq& t) { return s.prefix(meet_length(s, t)); }

inline BigInt cantor_pair(const BigInt& u, const BigInt& v) {
  BigInt w = u + v;
  return w * (w + 1) / 2 + v;
}

inline std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z) {
  BigInt w = (boost::multiprecision::sqrt(8 * z + 1) - 1) / 2;
  BigInt t = w * (w + 1) / 2;
  BigInt v = z - t;
  return {w - v, v};
}

inline std::uint64_t unpair_first(std::uint64_t z) {
  return cantor_unpair(BigInt(z)).first.convert_to<std::uint64_t>();
}

namespace detail {
// Nonempty sequences fold into a single natural left-to-right.
inline BigInt pack_entries(const Seq& s) {
  BigInt code = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) code = cantor_pair(code, BigInt(s[i]));
  return code;
}
}  // namespace detail

// Position of s in the fixed bijection between naturals and finite sequences:
// the empty sequence gets 0, and a nonempty s gets 1 + pair(|s|-1, pack(s)).
inline BigInt rank(const Seq& s) {
  if (s.empty()) return BigInt(0);
  return 1 + cantor_pair(BigInt(s.size()) - 1, detail::pack_entries(s));
}

// Inverse of rank.
inline Seq canonical_enum(std::uint64_t k) {
  if (k == 0) return Seq{};
  auto [len_minus_1, code] = cantor_unpair(BigInt(k) - 1);
  if (len_minus_1 > 1'000'000) throw Error(Errc::bad_input, "sequence length out of range");
  std::size_t len = len_minus_1.convert_to<std::size_t>() + 1;
  std::vector<std::uint64_t> entries(len);
  for (std::size_t i = len; i-- > 1;) {
    auto [rest, last] = cantor_unpair(code);
    entries[i] = last.convert_to<std::uint64_t>();
    code = rest;
  }
  entries[0] = code.convert_to<std::uint64_t>();
  return Seq(std::move(entries));
}

}  // namespace lipfree
