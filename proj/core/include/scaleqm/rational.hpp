#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace scaleqm {

/// Exact rational backed by GMP; always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "12.47", "-0.006", "+3", "7/4" or "-1/3" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_fraction_string(const Rational& value);

/// Exact decimal expansion when the denominator has only factors 2 and 5;
/// falls back to the fraction form otherwise.
std::string to_decimal_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace scaleqm
