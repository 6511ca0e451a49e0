#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace bilag {

using Int = boost::multiprecision::cpp_int;
// Always stored normalized: gcd(|num|, den) = 1, den > 0, zero = 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long p, long q = 1) { return Rational(p, q); }

// Render as "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);

// Parse "p", "-p", "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

// max(|numerator|, denominator) as an integer; the complexity measure used by
// the search grids.
Int height(const Rational& r);

} // namespace bilag
