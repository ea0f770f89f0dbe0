#include "cubesec/criterion.hpp"
#include "cubesec/volume.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace cubesec {

double grad_sum(const SectionQuery& q, std::size_t j) {
  q.validate();
  const std::vector<double>& a = q.direction.a;
  if (j < 1 || j > a.size()) throw std::domain_error("grad_sum: j must be in [1, d]");
  const std::vector<double> c = q.direction.active_coords();
  const std::size_t n = c.size();
  if (n < 3) throw std::domain_error("grad_sum: needs at least three non-zero coordinates");
  if (a[j - 1] == 0.0) return 0.0;

  // Position of coordinate j within the active block.
  std::size_t jj = 0;
  for (std::size_t i = 0; i + 1 < j; ++i) jj += a[i] != 0.0;
  const double aj = c[jj];
  const double b = q.b();
  const double m = static_cast<double>(n - 1);

  CompensatedSum acc;
  std::function<void(std::size_t, double, int, int)> rec = [&](std::size_t i, double dot, int parity, int vj) {
    if (i == n) {
      const double r = b - dot;
      const double term = std::pow(r, static_cast<int>(n - 2)) * (m * (0.5 - vj) - r / aj);
      acc.add(parity ? -term : term);
      return;
    }
    rec(i + 1, dot, parity, vj);
    const double next = dot + c[i];
    if (next <= b) rec(i + 1, next, parity ^ 1, i == jj ? 1 : vj);
  };
  if (b >= 0) rec(0, 0.0, 0, 0);

  double f = 1.0;
  for (std::size_t i = 2; i <= n - 1; ++i) f /= static_cast<double>(i);
  for (double x : c) f /= x;
  return acc.value() * f;
}

namespace {

void check_z(long n, const Rational& z) {
  if (n < 4) throw std::domain_error("Hessian sums need n >= 4 (got " + std::to_string(n) + ")");
  if (!(sgn(z) > 0 && z <= make_rational(n, 2))) throw std::domain_error("z must satisfy 0 < z <= n/2");
}

Rational factorial(long k) {
  Rational f(1);
  for (long i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

SqrtMultiple hessian_combo_sum(long n, const Rational& z) {
  check_z(n, z);
  return SqrtMultiple::make(Rational(build_S1(n).eval(z) / factorial(n - 3)), static_cast<unsigned long>(n));
}

SqrtMultiple hessian_outside_sum(long n, const Rational& z) {
  check_z(n, z);
  return SqrtMultiple::make(Rational(n * build_S2(n).eval(z) / (12 * factorial(n - 3))),
                            static_cast<unsigned long>(n));
}

namespace {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

void check_t(long n, double t) {
  if (n < 4) throw std::domain_error("integral forms need n >= 4 (got " + std::to_string(n) + ")");
  z_of_t(n, t);
}

// sin^k(alpha u) as a trigonometric sum.
TrigSum sin_power(double alpha, long k) {
  TrigSum s = TrigSum::one();
  for (long i = 0; i < k; ++i) s.times_sin(alpha);
  return s;
}

}  // namespace

QuadratureResult q1_integral(long n, double t, const QuadratureConfig& cfg) {
  check_t(n, t);
  const double nd = static_cast<double>(n);
  const double alpha = 1 / std::sqrt(nd);
  auto f = [=](double u) {
    const double s = alpha * u;
    return nd * sinc_bracket(s) * std::pow(sinc(s), static_cast<int>(n - 2)) * std::cos(2 * t * u);
  };

  // n [ n(1 - cos 2au)/u^2 - sqrt(n) sin(2au)/(2u) - 1 ] n^((n-2)/2) sin^(n-2)(au) / u^(n-2)
  const TrigSum p = sin_power(alpha, n - 2);
  TrigSum t1 = p;
  TrigSum cos_part = p;
  cos_part.times_cos(2 * alpha).scale(-1);
  t1 += cos_part;
  t1.times_power(static_cast<int>(n)).scale(std::pow(nd, nd / 2));
  TrigSum t2 = p;
  t2.times_sin(2 * alpha).times_power(static_cast<int>(n - 1)).scale(-0.5 * std::pow(nd, (nd - 1) / 2));
  TrigSum t3 = p;
  t3.times_power(static_cast<int>(n - 2)).scale(-std::pow(nd, (nd - 2) / 2));
  TrigSum e = t1;
  e += t2;
  e += t3;
  if (t != 0.0) e.times_cos(2 * t);
  e.scale(nd);

  TailModel tail;
  tail.envelope = [e](double U) { return e.tail_envelope(U); };
  tail.max_frequency = std::max(2 * alpha, 2 * t);
  tail.expansion = std::move(e);
  QuadratureResult r = integrate_half_line(f, tail, cfg);
  r.value *= 2 / std::numbers::pi;
  r.error_estimate *= 2 / std::numbers::pi;
  return r;
}

QuadratureResult q2_integral(long n, double t, const QuadratureConfig& cfg) {
  check_t(n, t);
  const double nd = static_cast<double>(n);
  const double alpha = 1 / std::sqrt(nd);
  auto f = [=](double u) { return u * u * std::pow(sinc(alpha * u), static_cast<int>(n)) * std::cos(2 * t * u); };

  // n^(n/2) sin^n(au) / u^(n-2)
  TrigSum e = sin_power(alpha, n);
  e.times_power(static_cast<int>(n - 2)).scale(std::pow(nd, nd / 2));
  if (t != 0.0) e.times_cos(2 * t);

  TailModel tail;
  tail.envelope = [e](double U) { return e.tail_envelope(U); };
  tail.max_frequency = std::max(alpha, 2 * t);
  tail.expansion = std::move(e);
  QuadratureResult r = integrate_half_line(f, tail, cfg);
  const double scale = -2 / (3 * std::numbers::pi);
  r.value *= scale;
  r.error_estimate *= -scale;
  return r;
}

}  // namespace cubesec
