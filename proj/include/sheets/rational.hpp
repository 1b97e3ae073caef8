#ifndef SHEETS_RATIONAL_HPP
#define SHEETS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sheets {

// Arbitrary-precision rational. gmp keeps every arithmetic result in
// canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" with q always present, e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& q);

// "3", "-1/2": integers without the denominator.
std::string to_display_string(const Rational& q);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace sheets

#endif
