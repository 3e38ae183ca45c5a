#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace grasscalc {

// All coefficients in the engine are exact rationals; integer counts
// (tableau numbers, factorials) are arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rational_to_string(const Rational& value);

// Accepts "p" and "p/q" with an optional leading minus.
// Throws std::invalid_argument on anything else (including q = 0).
Rational rational_from_string(const std::string& text);

}  // namespace grasscalc
