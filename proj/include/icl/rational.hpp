#pragma once

#include <string>

#include <gmpxx.h>

namespace icl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms; integers print without a denominator ("3").
inline std::string to_string(const Rational& value) { return value.get_str(); }
inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// Inverse of to_string; throws InvalidInput on junk.
Rational parse_rational(const std::string& text);

/// Decimal rendering with `digits` significant digits, computed from the exact value.
std::string to_decimal(const Rational& value, int digits = 12);

}  // namespace icl
