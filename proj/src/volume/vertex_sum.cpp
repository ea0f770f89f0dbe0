#include "cubesec/criterion.hpp"
#include "cubesec/volume.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace cubesec {

namespace {

// Visits every vertex v of [0,1]^k with c.v <= b. Coordinates are positive, so
// a prefix that already exceeds b cannot be completed.
template <class Scalar, class Visit>
void for_each_vertex_below(const std::vector<Scalar>& c, const Scalar& b, Visit&& visit) {
  const std::size_t k = c.size();
  std::function<void(std::size_t, const Scalar&, int)> rec = [&](std::size_t i, const Scalar& dot, int parity) {
    if (i == k) {
      visit(dot, parity);
      return;
    }
    rec(i + 1, dot, parity);
    Scalar next = dot + c[i];
    if (next <= b) rec(i + 1, next, parity ^ 1);
  };
  if (Scalar(0) <= b) rec(0, Scalar(0), 0);
}

std::vector<double> checked_active(const Direction& a) {
  a.validate();
  std::vector<double> c = a.active_coords();
  if (c.size() < 2) throw DegenerateSection("section needs at least two non-zero coordinates");
  return c;
}

double compensated(const std::vector<double>& c, double b, double norm) {
  const unsigned m = static_cast<unsigned>(c.size() - 1);
  CompensatedSum acc;
  for_each_vertex_below(c, b, [&](double dot, int parity) {
    const double term = std::pow(b - dot, m);
    acc.add(parity ? -term : term);
  });
  double f = norm;
  for (unsigned i = 2; i <= m; ++i) f /= i;
  for (double x : c) f /= x;
  return acc.value() * f;
}

double exact(const std::vector<double>& c, double b_double) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (double x : c) r.push_back(from_double(x));
  const Rational b = from_double(b_double);
  const unsigned long m = c.size() - 1;
  Rational sum(0);
  for_each_vertex_below(r, b, [&](const Rational& dot, int parity) {
    Rational term = pow(Rational(b - dot), m);
    if (parity) {
      sum -= term;
    } else {
      sum += term;
    }
  });
  Rational denom(1);
  for (unsigned long i = 2; i <= m; ++i) denom *= i;
  Rational norm2(0);
  for (const Rational& x : r) {
    denom *= x;
    norm2 += x * x;
  }
  return Rational(sum / denom).get_d() * std::sqrt(norm2.get_d());
}

}  // namespace

double vertex_sum_volume_b(const Direction& a, double b, SumMode mode) {
  std::vector<double> c = checked_active(a);
  if (!std::isfinite(b)) throw std::domain_error("offset b must be finite");
  return mode == SumMode::Exact ? exact(c, b) : compensated(c, b, a.norm());
}

double vertex_sum_volume(const SectionQuery& q, SumMode mode) {
  q.validate();
  return vertex_sum_volume_b(q.direction, q.b(), mode);
}

SqrtMultiple subdiagonal_volume(long n, const Rational& z) {
  if (n < 2) throw DegenerateSection("sub-diagonal volume needs n >= 2");
  const Rational half = make_rational(n, 2);
  if (!(sgn(z) >= 0 && z <= half)) throw std::domain_error("z must satisfy 0 <= z <= n/2");
  Rational sum(0);
  for (long i = 0; Rational(i) <= z; ++i) {
    Rational term = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
                    pow(Rational(z - i), static_cast<unsigned long>(n - 1));
    if (i % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  Rational fact(1);
  for (long i = 2; i < n; ++i) fact *= i;
  return SqrtMultiple::make(Rational(sum / fact), static_cast<unsigned long>(n));
}

double subdiagonal_volume(long n, double t) {
  const double z = z_of_t(n, t);
  return subdiagonal_volume(n, from_double(z)).value();
}

double fubini_integral(const Direction& a) {
  std::vector<double> c = checked_active(a);
  // V is a polynomial in b of degree k-1 between consecutive values of c.v.
  std::vector<double> breaks;
  for_each_vertex_below(c, std::numeric_limits<double>::infinity(), [&](double dot, int) { breaks.push_back(dot); });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  const int order = std::max(2, static_cast<int>(c.size()));
  auto f = [&](double b) { return vertex_sum_volume_b(a, b); };
  CompensatedSum acc;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) acc.add(gauss_legendre(f, breaks[i], breaks[i + 1], order));
  return acc.value();
}

}  // namespace cubesec
