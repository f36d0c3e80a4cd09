#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace chowcalc {

// Exact arbitrary-precision rational, always canonical: reduced to lowest
// terms with a positive denominator. Floating point never enters any
// computation in this library.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p" or "p/q" where p is an optionally negated decimal integer and
// q a positive decimal integer. Surrounding whitespace is trimmed; any other
// shape (floats, signed denominators, empty input, "1/0") is rejected with
// std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// Exact C(n, k); zero when k < 0 or k > n.
Integer binomial_coefficient(int n, int k);

}  // namespace chowcalc
