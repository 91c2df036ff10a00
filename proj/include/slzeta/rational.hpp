#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace slzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "numerator/denominator" in lowest terms; the denominator is always
/// written, so integers come out as "n/1".
std::string to_fraction_string(const Rational& value);

/// Inverse of to_fraction_string. Also accepts a bare integer.
Rational parse_fraction(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow2(unsigned long e);

}  // namespace slzeta
