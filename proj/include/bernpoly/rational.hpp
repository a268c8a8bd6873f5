#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace bernpoly {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar used for every probability and moment in the
// library. The backend keeps the canonical form: denominator > 0 and
// gcd(|numerator|, denominator) == 1. There is no floating point anywhere
// in the core; decimals exist only as display renderings.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// Parses "num/den" or a bare integer. Only canonical forms are accepted:
// the denominator must be positive, the fraction must be in lowest terms,
// and no signs or zero-padding beyond a single leading '-' are allowed
// ("2/4", "1/-2", "1/0", "007/2" are all rejected).
std::optional<Rational> try_parse_rational(std::string_view text);

// Same as try_parse_rational, throwing ParseError on rejection.
Rational parse_rational(std::string_view text);

// Canonical rendering: "num/den", or the bare integer when den == 1.
std::string to_string(const Rational& q);

// Display-only decimal rendering with `digits` fraction digits (rounded
// half away from zero). Never used in comparisons.
std::string to_decimal_string(const Rational& q, int digits);

}  // namespace bernpoly
