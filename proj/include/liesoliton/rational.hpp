#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace liesoliton {

// Exact coefficient arithmetic. cpp_rational keeps the invariants we rely on:
// gcd-reduced, denominator positive, arbitrary-precision integers.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den with an explicit zero-denominator check; throws std::domain_error.
Rational make_rational(Integer num, Integer den);

/// Parse "7", "-7", "3/4" or "-3/4"; throws std::invalid_argument otherwise.
Rational rational_from_string(const std::string& text);

/// Canonical text form: "n" for integers, "n/d" otherwise (d > 0).
std::string to_string(const Rational& value);

}  // namespace liesoliton
