#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cy4 {

using Integer = mpz_class;
using Rational = mpq_class;

// "3", "-1/2". Always canonical since mpq_class values are kept reduced.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "7", "-7", "3/4", "-3/4" with optional surrounding spaces.
Rational parse_rational(std::string_view text);

// num/den in lowest terms; den != 0.
Rational ratio(long num, long den);

Integer binomial(long n, long k);
Integer factorial(unsigned long n);

// Generalized binomial coefficient r(r-1)...(r-k+1)/k! for rational r.
Rational binomial(const Rational& r, unsigned long k);

}  // namespace cy4
