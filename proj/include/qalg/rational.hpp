#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qalg {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" exactly. Throws ParseError on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// True iff gcd(num, den) == 1 and den > 0.
bool is_reduced(const Rational& q);

/// n! as a rational.
Rational factorial(unsigned n);

/// q^n for n >= 0.
Rational pow(const Rational& q, unsigned n);

}  // namespace qalg
