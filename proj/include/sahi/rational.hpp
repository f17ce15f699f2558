#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace sahi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& r);

// Largest integer <= r, exact.
Integer floor_exact(const Rational& r);
long floor_long(const Rational& r);

double to_double(const Rational& r);

// log|r| without overflowing double for huge numerators/denominators.
// Precondition: r != 0.
double log_abs(const Rational& r);
double log_abs(const Integer& x);

// Accepts "p/q", plain integers, and decimal literals ("-0.125"); the
// decimal form parses to the exact rational it denotes.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace sahi
