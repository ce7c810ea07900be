#ifndef LCDECOMP_RATIONAL_HPP
#define LCDECOMP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcdecomp {

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
/// gmpxx keeps results of arithmetic canonical; values built from strings go
/// through parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws Error(InvalidInput) on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Always "p/q", q >= 1 (integers print as "p/1").
std::string format_rational(const Rational& q);

/// Short display form: "p" for integers, "p/q" otherwise.
std::string display_rational(const Rational& q);

/// Binomial coefficient C(top, k) for integers top >= 0, k >= 0; zero when k > top.
Integer binomial(long top, long k);

int sign(const Rational& q);

}  // namespace lcdecomp

#endif
