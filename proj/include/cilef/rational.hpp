#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cilef {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long k);

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with an optional leading '-'. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

}  // namespace cilef
