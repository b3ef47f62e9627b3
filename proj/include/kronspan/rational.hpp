#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kronspan {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms; integers are written "p/1" so the matrix file
/// format stays uniform.
std::string to_fraction(const Rational &value);

/// Like to_fraction but integers are written without a denominator.
std::string to_compact(const Rational &value);

} // namespace kronspan
