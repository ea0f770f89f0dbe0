#include "cubesec/polynomial.hpp"

#include "integer_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubesec {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({Rational(-r), Rational(1)}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

namespace {

RationalInterval mul(const RationalInterval& a, const RationalInterval& b) {
  Rational p1(a.lo * b.lo), p2(a.lo * b.hi), p3(a.hi * b.lo), p4(a.hi * b.hi);
  RationalInterval r;
  r.lo = std::min({p1, p2, p3, p4});
  r.hi = std::max({p1, p2, p3, p4});
  return r;
}

}  // namespace

RationalInterval Polynomial::eval_range(const Rational& lo, const Rational& hi) const {
  RationalInterval x{lo, hi};
  RationalInterval acc{Rational(0), Rational(0)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

RationalInterval Polynomial::eval_centered(const Rational& lo, const Rational& hi) const {
  const Rational m((lo + hi) / 2);
  const Rational center = eval(m);
  if (lo == hi) return {center, center};
  RationalInterval slope = derivative().eval_range(lo, hi);
  RationalInterval offset = mul(slope, RationalInterval{Rational(lo - m), Rational(hi - m)});
  return {Rational(center + offset.lo), Rational(center + offset.hi)};
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.emplace_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shift(const Rational& a) const {
  // Horner in the shifted basis: O(d^2) exact operations.
  std::vector<Rational> c = coeffs_;
  const std::size_t n = c.size();
  if (sgn(a) == 0) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (Rational& x : a.coeffs_) x = -x;
  return a;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) {
      out << mag.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  const Rational lb = b.leading();
  for (int i = da; i >= db; --i) {
    const Rational f(r[static_cast<std::size_t>(i)] / lb);
    q[static_cast<std::size_t>(i - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  detail::ZPoly g = detail::primitive_gcd(detail::to_primitive(a), detail::to_primitive(b));
  Polynomial r = detail::to_rational(g);
  return r * Rational(1 / r.leading());
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square_free_part: zero polynomial");
  Polynomial g = gcd(p, p.derivative());
  Polynomial q = divmod(p, g).first;
  return q * Rational(1 / q.leading());
}

int sign_right_of(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) throw std::domain_error("sign_right_of: zero polynomial");
  // First nonzero Taylor coefficient at x decides the sign just to the right.
  Polynomial q = p;
  while (true) {
    const int s = sgn(q.eval(x));
    if (s != 0) return s;
    q = q.derivative();
  }
}

int sign_left_of(const Polynomial& p, const Rational& x) {
  if (p.is_zero()) throw std::domain_error("sign_left_of: zero polynomial");
  Polynomial q = p;
  int order = 0;
  while (true) {
    const int s = sgn(q.eval(x));
    if (s != 0) return (order % 2 == 0) ? s : -s;
    q = q.derivative();
    ++order;
  }
}

}  // namespace cubesec
