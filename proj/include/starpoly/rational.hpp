#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace starpoly {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;

/// Parses "a", "-a", "a/b" or "-a/b" with decimal digits. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rat parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);

/// n!, memoized per thread.
const Int& factorial(unsigned n);

/// n! / (n - k)!; zero when k > n.
Int falling_factorial(unsigned n, unsigned k);

/// C(n, k); zero when k > n.
Int binomial(unsigned n, unsigned k);

Rat pow(const Rat& base, unsigned exponent);

/// num / den in canonical form. den must be nonzero.
Rat ratio(const Int& num, const Int& den);

}  // namespace starpoly
