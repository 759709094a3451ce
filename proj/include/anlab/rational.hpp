#pragma once

// Exact rationals for every symbolic eigenvalue computation. Condition (iv)
// compares a tail limit with an infinite-multiplicity atom for equality, so
// nothing in the symbolic layer may round.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace anlab {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws Error{ParseError} on anything else
/// or on a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q" when the denominator is not 1, "p" otherwise.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// base^exponent for exponent >= 0.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace anlab
