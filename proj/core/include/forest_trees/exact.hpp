#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace forest_trees {

/// Arbitrary-precision integer. Every count in the library is one of these.
using ExactInt = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form.
using ExactRational = mpq_class;

std::string to_string(const ExactInt& value);

/// "p" for integral values, "p/q" otherwise.
std::string to_string(const ExactRational& value);

/// Parses "p", "-p", "p/q" (decimal). Throws Error(ParseError) on anything else,
/// including a zero denominator.
ExactRational parse_rational(std::string_view text);

bool is_integral(const ExactRational& value);

/// Numerator of an integral rational; throws Error(DivisibilityViolation)
/// when `value` is not an integer. `what` is used in the message.
ExactInt require_integral(const ExactRational& value, std::string_view what);

ExactInt power(const ExactInt& base, unsigned long exponent);

/// base^exponent for any integer exponent; base must be non-zero when the
/// exponent is negative.
ExactRational power(const ExactRational& base, long exponent);

}  // namespace forest_trees
