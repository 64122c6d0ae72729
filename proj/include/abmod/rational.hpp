#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abmod {

// Exact rational scalars. mpq_class keeps values canonical (gcd 1, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (decimal); the result is canonicalized.
Rational parse_rational(std::string_view text);

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// Representative of -value modulo 1 in (0, 1]: the class "alpha" with value in -alpha - Z.
Rational class_representative(const Rational& root);

}  // namespace abmod
