#include "cubesec/criterion.hpp"

#include <cmath>
#include <stdexcept>

namespace cubesec {

namespace {

// Largest precision tried before a sign is declared undecidable.
constexpr unsigned long kMaxBits = 1UL << 14;

// Enclosure of pw over [zlo, zhi], taking the union across pieces it overlaps.
RationalInterval enclose(const PiecewisePolynomial& pw, const Rational& zlo, const Rational& zhi) {
  const std::size_t first = pw.piece_index(zlo);
  const std::size_t last = pw.piece_index(zhi);
  RationalInterval acc;
  for (std::size_t k = first; k <= last; ++k) {
    Rational lo = k == first ? zlo : pw.piece_lo(k);
    Rational hi = k == last ? zhi : pw.piece_hi(k);
    RationalInterval e = pw.pieces()[k].eval_centered(lo, hi);
    if (k == first) {
      acc = e;
    } else {
      if (e.lo < acc.lo) acc.lo = e.lo;
      if (e.hi > acc.hi) acc.hi = e.hi;
    }
  }
  return acc;
}

struct ZEnclosure {
  Rational lo;
  Rational hi;
};

// z = n/2 - t sqrt(n) enclosed using sqrt(n) to the given number of bits.
ZEnclosure z_enclosure(long n, const Rational& t, unsigned long bits) {
  const SqrtBounds b = sqrt_bounds(static_cast<unsigned long>(n), bits);
  const Rational half = make_rational(n, 2);
  return {Rational(half - t * b.hi), Rational(half - t * b.lo)};
}

int certified_sign(const PiecewisePolynomial& pw, long n, const Rational& t, const Rational& eps,
                   Rational* z_mid) {
  for (unsigned long bits = 64; bits <= kMaxBits; bits *= 2) {
    ZEnclosure z = z_enclosure(n, t, bits);
    if (sgn(z.lo) <= 0) continue;
    *z_mid = (z.lo + z.hi) / 2;
    RationalInterval v = enclose(pw, z.lo, z.hi);
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    // z pinned to within eps and the sign still open: z sits on (or next to) a zero.
    if (z.hi - z.lo < eps) return 0;
  }
  return 0;
}

}  // namespace

Rational default_classify_eps() { return pow10(-30); }

Extremality classify_at_z(const SubdiagonalSpec& spec, const Rational& z) {
  spec.validate();
  const Rational half = make_rational(spec.n, 2);
  if (!(sgn(z) > 0 && z <= half)) {
    throw std::domain_error("z must satisfy 0 < z <= n/2 = " + half.get_str() + " (got " + z.get_str() + ")");
  }
  Extremality e;
  e.z = z;
  e.z_exact = true;
  e.t = t_of_z(spec.n, z.get_d());
  e.s1_sign = sgn(build_S1(spec.n).eval(z));
  if (!spec.diagonal()) e.s2_sign = sgn(build_S2(spec.n).eval(z));
  e.kind = decide(e.s1_sign, e.s2_sign, spec.diagonal());
  return e;
}

Extremality classify(const SubdiagonalSpec& spec, const Rational& t, const Rational& eps) {
  spec.validate();
  if (sgn(t) < 0 || 4 * t * t >= spec.n) {
    throw std::domain_error("t must satisfy 0 <= t < sqrt(n)/2 = " +
                            std::to_string(std::sqrt(static_cast<double>(spec.n)) / 2) + " (got " +
                            std::to_string(t.get_d()) + ")");
  }
  unsigned long root = 0;
  if (sgn(t) == 0 || is_perfect_square(static_cast<unsigned long>(spec.n), &root)) {
    const Rational z(make_rational(spec.n, 2) - t * root);
    Extremality e = classify_at_z(spec, z);
    e.t = t.get_d();
    return e;
  }

  Extremality e;
  e.z_exact = false;
  e.t = t.get_d();
  e.s1_sign = certified_sign(build_S1(spec.n), spec.n, t, eps, &e.z);
  if (!spec.diagonal()) e.s2_sign = certified_sign(build_S2(spec.n), spec.n, t, eps, &e.z);
  e.kind = decide(e.s1_sign, e.s2_sign, spec.diagonal());
  return e;
}

Extremality classify(const SubdiagonalSpec& spec, double t) {
  if (!std::isfinite(t)) throw std::domain_error("t must be finite");
  return classify(spec, from_double(t), default_classify_eps());
}

}  // namespace cubesec
