#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrgr {

/// Exact rational number. GMP keeps values canonical (lowest terms, positive
/// denominator) as long as they are produced by arithmetic; parse_rational
/// canonicalizes string input.
using Rational = mpq_class;

/// Parses "p", "p/q", or "-p/q". Throws InputError on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" string.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace arrgr
