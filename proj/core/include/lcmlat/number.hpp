#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcmlat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Decimal digits.
std::string to_string(const Integer& value);
/// Always "num/den" with den > 0, so integers read back as rationals exactly.
std::string to_string(const Rational& value);

/// Optional sign followed by decimal digits; throws ValidationError.
Integer parse_integer(std::string_view text);
/// "num/den" or a bare integer; the result is normalized.
Rational parse_rational(std::string_view text);

Integer power(const Integer& base, unsigned long exponent);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact num/den, normalized.
Rational make_rational(const Integer& num, const Integer& den);

}  // namespace lcmlat
