#ifndef QBRACKET_RATIONAL_HPP
#define QBRACKET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qbracket {

// Exact rational, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// base^e for any integer e; e < 0 requires base != 0.
Rational rational_pow(const Rational& base, long e);
Integer integer_pow(const Integer& base, unsigned long e);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace qbracket

#endif
