#include "cubesec/roots.hpp"

#include "integer_poly.hpp"

#include <stdexcept>

namespace cubesec {

namespace {

void check_input(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("root isolation: zero polynomial");
  if (!(lo < hi)) throw std::domain_error("root isolation: empty interval");
}

IsolatingInterval open_interval(const std::shared_ptr<const Polynomial>& poly, const Rational& lo,
                                const Rational& hi) {
  IsolatingInterval iv;
  iv.lo = lo;
  iv.hi = hi;
  iv.poly = poly;
  iv.sign_left = sign_right_of(*poly, lo);
  iv.sign_right = sign_left_of(*poly, hi);
  return iv;
}

IsolatingInterval exact_root(const std::shared_ptr<const Polynomial>& poly, const Rational& x) {
  IsolatingInterval iv;
  iv.lo = x;
  iv.hi = x;
  iv.poly = poly;
  iv.sign_left = sign_left_of(*poly, x);
  iv.sign_right = sign_right_of(*poly, x);
  return iv;
}

struct SturmIsolator {
  std::vector<detail::ZPoly> seq;
  std::shared_ptr<const Polynomial> poly;
  std::vector<IsolatingInterval> out;

  // Roots in the open interval (l, r), given V(l) and V(r).
  void run(const Rational& l, const Rational& r, int vl, int vr) {
    int count = vl - vr;
    if (detail::sign_at(seq.front(), r) == 0) --count;
    if (count <= 0) return;
    if (count == 1) {
      out.push_back(open_interval(poly, l, r));
      return;
    }
    const Rational m((l + r) / 2);
    const int vm = detail::sturm_variations(seq, m);
    run(l, m, vl, vm);
    if (detail::sign_at(seq.front(), m) == 0) out.push_back(exact_root(poly, m));
    run(m, r, vm, vr);
  }
};

struct Stalled {};

struct DescartesIsolator {
  std::shared_ptr<const Polynomial> poly;
  int max_depth;
  std::vector<IsolatingInterval> out;

  void run(detail::ZPoly q, const Rational& l, const Rational& r, int depth) {
    const int v = detail::unit_interval_variations(q);
    if (v == 0) return;
    if (v == 1) {
      out.push_back(open_interval(poly, l, r));
      return;
    }
    if (depth >= max_depth) throw Stalled{};
    const Rational m((l + r) / 2);
    detail::scale_half(q);
    detail::make_primitive(q);
    detail::ZPoly right = q;
    detail::taylor_shift1(right);
    detail::make_primitive(right);
    const bool mid_root = !right.empty() && sgn(right.front()) == 0;
    run(std::move(q), l, m, depth + 1);
    if (mid_root) out.push_back(exact_root(poly, m));
    run(std::move(right), m, r, depth + 1);
  }
};

}  // namespace

std::size_t count_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  check_input(p, lo, hi);
  std::vector<detail::ZPoly> seq = detail::sturm_sequence(detail::to_primitive(p));
  return static_cast<std::size_t>(detail::sturm_variations(seq, lo) - detail::sturm_variations(seq, hi));
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
  check_input(p, lo, hi);
  SturmIsolator iso;
  iso.poly = std::make_shared<const Polynomial>(square_free_part(p));
  iso.seq = detail::sturm_sequence(detail::to_primitive(*iso.poly));
  iso.run(lo, hi, detail::sturm_variations(iso.seq, lo), detail::sturm_variations(iso.seq, hi));
  return std::move(iso.out);
}

std::vector<IsolatingInterval> isolate_roots_descartes(const Polynomial& p, const Rational& lo,
                                                       const Rational& hi) {
  check_input(p, lo, hi);
  DescartesIsolator iso;
  iso.poly = std::make_shared<const Polynomial>(p);
  iso.max_depth = 64 + 4 * p.degree();
  try {
    iso.run(detail::map_to_unit(p, lo, hi), lo, hi, 0);
    return std::move(iso.out);
  } catch (const Stalled&) {
    // A multiple root keeps the variation count at >= 2; restart on the square-free part.
  }
  DescartesIsolator sqf;
  sqf.poly = std::make_shared<const Polynomial>(square_free_part(p));
  sqf.max_depth = 1 << 20;
  sqf.run(detail::map_to_unit(*sqf.poly, lo, hi), lo, hi, 0);
  return std::move(sqf.out);
}

IsolatingInterval refine(const IsolatingInterval& iv, const Rational& eps) {
  if (sgn(eps) <= 0) throw std::domain_error("refine: eps must be positive");
  IsolatingInterval r = iv;
  if (r.exact()) return r;
  const detail::ZPoly z = detail::to_primitive(*r.poly);
  while (r.width() >= eps) {
    const Rational m((r.lo + r.hi) / 2);
    const int s = detail::sign_at(z, m);
    if (s == 0) {
      r.lo = m;
      r.hi = m;
      return r;
    }
    if (s == r.sign_left) {
      r.lo = m;
    } else {
      r.hi = m;
    }
  }
  return r;
}

Rational refine_root(const IsolatingInterval& iv, const Rational& eps) {
  IsolatingInterval r = refine(iv, eps);
  return Rational((r.lo + r.hi) / 2);
}

std::optional<Rational> snap_exact(const IsolatingInterval& iv) {
  if (iv.exact()) return iv.lo;
  Rational c = simplest_between(iv.lo, iv.hi);
  if (c == iv.lo || c == iv.hi) return std::nullopt;
  if (sgn(iv.poly->eval(c)) == 0) return c;
  return std::nullopt;
}

}  // namespace cubesec
