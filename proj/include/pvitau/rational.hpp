#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pvitau {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form (den > 0, lowest terms).
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Accepts "n", "-n", "n/d"; throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);

// Falling-factorial binomial: C(x, k) = x(x-1)...(x-k+1)/k!, 0 for k < 0.
Rational binomial(const Rational& x, long k);
// Rising factorial x(x+1)...(x+k-1).
Rational pochhammer(const Rational& x, long k);
Integer factorial(long k);

Rational pow(const Rational& x, int e);

}  // namespace pvitau
