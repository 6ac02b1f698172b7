#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace shadowdyn {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// Accepts an optional sign followed by decimal digits.
BigInt parse_bigint(std::string_view text);

// ln|x| for x != 0. Goes through the mantissa/exponent split, so the result
// stays accurate for integers far beyond the range of double.
double log_abs(const BigInt& x);
double log_abs(const Rational& x);

int sign(const BigInt& x);

// Throws InvalidArgument when x does not fit.
std::int64_t to_int64(const BigInt& x);

bool is_perfect_square(const BigInt& x);

}  // namespace shadowdyn
