#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace innc {

using Integer = mpz_class;
/// Exact rational scalar. mpq_class keeps values in canonical reduced form
/// (positive denominator, coprime parts) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p", "-p" or "p/q" (decimal). Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Representative of q modulo 1 in [0, 1).
Rational mod_one(const Rational &q);

Integer floor(const Rational &q);

Integer lcm(const Integer &a, const Integer &b);

/// Least common multiple of the denominators (1 for an empty range).
Integer denominator_lcm(const std::vector<Rational> &values);

/// Converts to long, throwing DomainError on overflow.
long to_long(const Integer &z);

} // namespace innc
