#pragma once

#include "cubesec/polynomial.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace cubesec {

/// A root of `poly` certified to be the only one in the open interval (lo, hi),
/// or the exact root lo when lo == hi. The signs are those of `poly` just
/// inside each end and always differ.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  std::shared_ptr<const Polynomial> poly;
  int sign_left = 0;
  int sign_right = 0;

  bool exact() const { return lo == hi; }
  Rational width() const { return Rational(hi - lo); }
  double approx() const { return Rational((lo + hi) / 2).get_d(); }
};

/// Distinct roots of p in (lo, hi], counted with a Sturm sequence.
std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Isolates the distinct real roots of p in the open interval (lo, hi) by
/// Sturm-sequence bisection on the square-free part, in increasing order.
/// Throws std::domain_error on the zero polynomial or lo >= hi.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Same contract via Descartes' rule of signs with bisection. Much cheaper than
/// Sturm at high degree; the square-free part is only computed when a multiple
/// root stalls the bisection.
std::vector<IsolatingInterval> isolate_roots_descartes(const Polynomial& p, const Rational& lo,
                                                       const Rational& hi);

/// Bisects with exact signs until the width is below eps (or the root is hit).
IsolatingInterval refine(const IsolatingInterval& iv, const Rational& eps);

/// Midpoint of the refined interval; the root itself when it was hit exactly.
Rational refine_root(const IsolatingInterval& iv, const Rational& eps);

/// If the simplest rational inside the interval is a root, returns it.
std::optional<Rational> snap_exact(const IsolatingInterval& iv);

}  // namespace cubesec
