#pragma once

// Exact scalars. Rational is GMP's mpq_class, which keeps values in
// canonical form (gcd(num, den) = 1, den > 0) after every operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubesec {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Exact C(n, i); zero when i > n.
Rational binomial(unsigned long n, unsigned long i);

Rational pow(const Rational& base, unsigned long exponent);
Rational pow10(int exponent);

int sign(const Rational& x);

/// Exact conversion: every finite double is a dyadic rational.
Rational from_double(double x);
double to_double(const Rational& x);

/// Accepts "p/q", integers, and decimals with optional exponent ("1.75", "-2e-3").
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Rational bounds lo <= sqrt(n) <= hi with hi - lo <= 2^-bits.
struct SqrtBounds {
  Rational lo;
  Rational hi;
};
SqrtBounds sqrt_bounds(unsigned long n, unsigned long bits);

/// Non-negative integer square root when n is a perfect square.
bool is_perfect_square(unsigned long n, unsigned long* root = nullptr);

}  // namespace cubesec
