#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace biuv {

/// Exact rational scalar used by the exact series backend. All identities in
/// this library are checked with these; doubles exist only for sampling.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", plain integers, and decimal literals ("0.25" -> 1/4).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" rendering; integers print without the "/1".
std::string fraction_string(const Rational& r);

/// Decimal approximation with `digits` significant digits, computed in
/// 50-digit software floats so the text is platform-independent.
std::string decimal_string(const Rational& r, int digits = 12);

double to_double(const Rational& r);

Rational factorial(unsigned n);

}  // namespace biuv
