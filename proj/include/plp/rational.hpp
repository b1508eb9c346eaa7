#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plp {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a", "a/b" or "-a/b". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Always "num/den", denominator positive.
std::string to_string(const Rational& q);

// Decimal rendering with a fixed number of fractional digits, for display only.
std::string to_decimal(const Rational& q, int digits = 6);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace plp
