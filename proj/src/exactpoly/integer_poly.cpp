#include "integer_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubesec::detail {

void strip(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const ZPoly& p) {
  BigInt g(0);
  for (const BigInt& c : p) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  strip(p);
  if (p.empty()) return;
  BigInt g = content(p);
  if (g == 1) return;
  for (BigInt& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_primitive(const Polynomial& p) {
  BigInt l(1);
  for (const Rational& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    BigInt v = l / c.get_den();
    v *= c.get_num();
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

Polynomial to_rational(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const BigInt& v : p) c.emplace_back(v);
  return Polynomial(std::move(c));
}

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  if (p.size() <= 1) return d;
  d.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo_remainder: zero divisor");
  ZPoly r = a;
  strip(r);
  const int db = degree(b);
  const BigInt& lb = b.back();
  int delta = degree(r) - db + 1;
  if (delta <= 0) return r;
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const BigInt lr = r.back();
    for (BigInt& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
    strip(r);
    --delta;
  }
  // Scale to the full lc(b)^(deg a - deg b + 1) so the sign convention is uniform.
  if (delta > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta));
    for (BigInt& c : r) c *= f;
  }
  return r;
}

ZPoly primitive_gcd(ZPoly a, ZPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_remainder(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && sgn(a.back()) < 0) {
    for (BigInt& c : a) c = -c;
  }
  return a;
}

std::vector<ZPoly> sturm_sequence(const ZPoly& p) {
  std::vector<ZPoly> seq;
  ZPoly p0 = p;
  make_primitive(p0);
  if (p0.empty()) throw std::domain_error("sturm_sequence: zero polynomial");
  ZPoly p1 = derivative(p0);
  make_primitive(p1);
  seq.push_back(p0);
  if (p1.empty()) return seq;
  seq.push_back(p1);
  while (true) {
    const ZPoly& a = seq[seq.size() - 2];
    const ZPoly& b = seq.back();
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^(delta+1) * rem; negate and undo any negative scale factor.
    const int delta = degree(a) - degree(b);
    const bool negative_scale = sgn(b.back()) < 0 && (delta + 1) % 2 == 1;
    if (!negative_scale) {
      for (BigInt& c : r) c = -c;
    }
    make_primitive(r);
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_at(const ZPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = p.back();
  BigInt bpow(1);
  for (int i = degree(p) - 1; i >= 0; --i) {
    bpow *= b;
    acc *= a;
    acc += p[static_cast<std::size_t>(i)] * bpow;
  }
  return sgn(acc);
}

int sturm_variations(const std::vector<ZPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const ZPoly& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void taylor_shift1(ZPoly& q) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) q[j - 1] += q[j];
  }
}

void scale_half(ZPoly& q) {
  const int d = degree(q);
  for (int i = 0; i < d; ++i) {
    mpz_mul_2exp(q[static_cast<std::size_t>(i)].get_mpz_t(), q[static_cast<std::size_t>(i)].get_mpz_t(),
                 static_cast<mp_bitcnt_t>(d - i));
  }
}

int coefficient_variations(const ZPoly& q) {
  int changes = 0;
  int last = 0;
  for (const BigInt& c : q) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int unit_interval_variations(const ZPoly& q) {
  // (1 + x)^d q(1 / (1 + x)): reverse the coefficients, then shift by one.
  ZPoly r(q.rbegin(), q.rend());
  taylor_shift1(r);
  return coefficient_variations(r);
}

ZPoly map_to_unit(const Polynomial& p, const Rational& lo, const Rational& hi) {
  ZPoly q = to_primitive(p.shift(lo));
  // q(w x) with w = u / v: multiply coefficient i by u^i v^(d - i).
  const Rational w(hi - lo);
  const BigInt& u = w.get_num();
  const BigInt& v = w.get_den();
  const int d = degree(q);
  std::vector<BigInt> upow(q.size()), vpow(q.size());
  if (!q.empty()) {
    upow[0] = 1;
    vpow[0] = 1;
    for (std::size_t i = 1; i < q.size(); ++i) {
      upow[i] = upow[i - 1] * u;
      vpow[i] = vpow[i - 1] * v;
    }
  }
  for (int i = 0; i <= d; ++i) {
    q[static_cast<std::size_t>(i)] *= upow[static_cast<std::size_t>(i)] * vpow[static_cast<std::size_t>(d - i)];
  }
  make_primitive(q);
  return q;
}

}  // namespace cubesec::detail
