#pragma once

// Integer-coefficient polynomial kernels used by root isolation. Working over
// Z with content removal keeps coefficient growth far below the rational
// Euclidean algorithm at the degrees we need (up to a few hundred).

#include "cubesec/polynomial.hpp"

#include <vector>

namespace cubesec::detail {

/// Ascending coefficients, trailing zeros stripped.
using ZPoly = std::vector<BigInt>;

void strip(ZPoly& p);
int degree(const ZPoly& p);
BigInt content(const ZPoly& p);
/// Divides by the positive content; leaves the sign of the leading coefficient alone.
void make_primitive(ZPoly& p);

/// Clears denominators and removes the content. Positive multiple of p.
ZPoly to_primitive(const Polynomial& p);
Polynomial to_rational(const ZPoly& p);

ZPoly derivative(const ZPoly& p);
/// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);
/// Primitive gcd with positive leading coefficient.
ZPoly primitive_gcd(ZPoly a, ZPoly b);

/// p, p', -rem, ... with positive rescaling at each step (primitive PRS), ending at gcd(p, p').
std::vector<ZPoly> sturm_sequence(const ZPoly& p);
/// Sign changes in the sequence evaluated at x, zeros skipped.
int sturm_variations(const std::vector<ZPoly>& seq, const Rational& x);

/// Exact sign of p(x) via homogeneous integer evaluation.
int sign_at(const ZPoly& p, const Rational& x);

/// q(x) -> q(x + 1), in place.
void taylor_shift1(ZPoly& q);
/// q(x) -> 2^deg * q(x / 2), in place.
void scale_half(ZPoly& q);
/// Sign variations among the nonzero coefficients.
int coefficient_variations(const ZPoly& q);
/// Descartes bound on the number of roots of q in the open interval (0, 1).
int unit_interval_variations(const ZPoly& q);
/// Positive multiple of p(lo + (hi - lo) x) with integer coefficients.
ZPoly map_to_unit(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace cubesec::detail
