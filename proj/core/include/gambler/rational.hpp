#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gambler {

/// Arbitrary-precision integer and rational used wherever evaluation must be
/// exact (probabilities like 0.6 are stored as 3/5, never as doubles).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_pow(const Rational& base, unsigned exponent);

/// Parses "num/den" or a decimal string ("0.6" -> 3/5, "1" -> 1). Decimals are
/// converted exactly as digits/10^k. Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Shortest round-trip decimal form of a double (std::to_chars), locale
/// independent.
std::string format_double(double value);

std::string to_string(const Rational& r);

}  // namespace gambler
