#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace floerhp {

// Exact rational arithmetic. All quantities in this project are small
// (seminorm values, half-integer correction terms, boundary slopes), so a
// 64-bit numerator/denominator is ample.
using Rational = boost::rational<long long>;

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline bool is_half_integer(const Rational& r) {
  return r.denominator() == 1 || r.denominator() == 2;
}

// Value as an integer; the caller must have checked is_integer().
inline long long as_integer(const Rational& r) {
  if (!is_integer(r)) throw std::logic_error("rational is not an integer");
  return r.numerator();
}

// "a" or "a/b" with optional leading sign on a, b >= 1.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "a" when the denominator is 1, else "a/b".
std::string format_rational(const Rational& r);

}  // namespace floerhp
