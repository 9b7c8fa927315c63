#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orl {

/// Exact rational used for every threshold constant (ε, α, c_s, ...).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q", an integer, or a decimal such as "0.125" exactly.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos)
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  if (digits.empty() || digits == "-") digits += "0";
  return Rational(BigInt(digits), den);
}

/// Largest integer L with 2^L <= x, for x > 0.
inline long floor_log2(const Rational& x) {
  long l = 0;
  Rational p = 1;
  if (x >= 1) {
    while (p * 2 <= x) {
      p *= 2;
      ++l;
    }
  } else {
    while (p > x) {
      p /= 2;
      --l;
    }
  }
  return l;
}

/// Smallest integer >= x.
inline BigInt ceil_rational(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (q * denominator(x) < numerator(x)) ++q;
  return q;
}

}  // namespace orl
