#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace g2maps {

// GMP keeps every mpq_class canonical (lowest terms, positive denominator)
// after each arithmetic operation. Never bind an arithmetic expression to
// `auto`: gmpxx returns expression templates that reference temporaries.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0). Whitespace is not allowed.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace g2maps
