#pragma once

// Exact integer and rational scalars shared by every module.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fewnomial {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "27", "-5/12" or a plain decimal such as "0.125" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

inline int sign(const Integer& value) { return sgn(value); }
inline int sign(const Rational& value) { return sgn(value); }

Integer binomial(unsigned long n, unsigned long k);
Integer ipow(const Integer& base, unsigned long exponent);
Rational floor_of(const Rational& value);

/// Rounds value to `digits` decimals (half away from zero) and formats it.
std::string to_decimal(const Rational& value, int digits);

} // namespace fewnomial
