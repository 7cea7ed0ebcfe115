#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gravity {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers, and finite decimals ("-0.25"); all are exact.
Rational parse_rational(const std::string& text);

// Emits "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline Rational abs_rat(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace gravity
