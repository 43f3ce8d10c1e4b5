#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace paradd {

/// Arbitrary-precision integer used for scalars.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational used for every time, delay and bound.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "1.25", "17/10" (optionally signed) into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Parses a non-negative decimal integer or a 0x-prefixed hex integer.
BigInt parse_bigint(std::string_view text);

/// "p" when the value is integral, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Always "p/q", including integers ("26/1").
std::string to_fraction_string(const Rational& value);

/// Fixed-point decimal with `places` fractional digits, rounding half away
/// from zero.
std::string to_fixed(const Rational& value, int places);

/// Number of significant bits; 0 for zero. Requires value >= 0.
std::size_t bit_length(const BigInt& value);

/// Narrowing conversion that throws std::overflow_error when out of range.
std::int64_t to_int64(const BigInt& value);

}  // namespace paradd
