#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loiqif {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// num/den in lowest terms. den must be non-zero.
inline Rational make_rational(const mpz_class& num, const mpz_class& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q", "p" or "0". Throws InvalidDistribution on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

} // namespace loiqif
