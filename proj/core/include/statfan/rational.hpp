#ifndef STATFAN_RATIONAL_HPP
#define STATFAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace statfan {

/// Exact arbitrary-precision rational scalar. GMP keeps values canonical
/// (positive denominator, gcd-reduced, zero stored as 0/1), which is exactly
/// the invariant all identifiability decisions rely on.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses an integer ("-1"), an exact decimal ("0.25" -> 1/4) or a fraction
/// ("6/8" -> 3/4). Throws ParseError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "3/4", integers without denominator.
std::string to_string(const Rational& q);

bool is_canonical(const Rational& q);

}  // namespace statfan

#endif
