#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace moebius {

// Exact arithmetic backbone. Every index computation runs on these types;
// floating point appears only in the display helper below.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational keeps values canonical: lowest terms, positive denominator.
bool is_integer(const Rational& value);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Decimal approximation for human-readable output only.
std::string to_decimal_string(const Rational& value, int significant_digits = 6);

}  // namespace moebius
