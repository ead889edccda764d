#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qpt {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "n" or "p/q" (q > 0, optional leading '-') into a canonical
/// rational. Returns false for anything else, including decimals.
bool parse_rational(std::string_view text, Rational& out);

/// Reduced "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

BigInt pow2(unsigned long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Largest e with base^e <= value; requires base >= 2 and value >= 1.
unsigned long floor_log(const BigInt& value, unsigned long base);

}  // namespace qpt
