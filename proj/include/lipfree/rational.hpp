#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <string_view>

#include "lipfree/error.hpp"

namespace lipfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^exponent as an exact rational; exponent may be negative.
inline Rational pow2(long exponent) {
  if (exponent >= 0) return Rational(BigInt(1) << exponent);
  return Rational(BigInt(1), BigInt(1) << -exponent);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw Error(Errc::parse_error, "empty rational literal");
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    if (s.empty()) throw Error(Errc::parse_error, "empty integer literal");
    std::size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (pos == s.size()) throw Error(Errc::parse_error, "sign without digits");
    for (std::size_t p = pos; p < s.size(); ++p)
      if (!std::isdigit(static_cast<unsigned char>(s[p])))
        throw Error(Errc::parse_error, "invalid integer literal '" + std::string(s) + "'");
    return BigInt(std::string(s));
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::parse_error, "zero denominator");
  return Rational(num, den);
}

}  // namespace lipfree
