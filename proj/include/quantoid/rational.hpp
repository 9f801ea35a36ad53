#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quantoid {

using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading '-'; q must be nonzero.
// The result is canonicalized. Throws Error(MalformedRational).
Rational parse_rational(std::string_view text);

// Lowest terms, "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// Closest rational with denominator at most `max_denominator`, matching
// Python's Fraction.limit_denominator including its tie rule.
Rational limit_denominator(const Rational& value, const mpz_class& max_denominator);

}  // namespace quantoid
