#include "cubesec/criterion.hpp"

#include <cmath>
#include <stdexcept>

namespace cubesec {

void SubdiagonalSpec::validate() const {
  if (n < 4) throw std::domain_error("n must be >= 4 (got " + std::to_string(n) + ")");
  if (d < n) throw std::domain_error("d must be >= n (got d = " + std::to_string(d) + ", n = " + std::to_string(n) + ")");
}

std::string to_string(ExtremalityKind kind) {
  switch (kind) {
    case ExtremalityKind::StrictLocalMax: return "StrictLocalMax";
    case ExtremalityKind::StrictLocalMin: return "StrictLocalMin";
    case ExtremalityKind::NotExtremal: return "NotExtremal";
    case ExtremalityKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Polynomial p_poly(long i, long n) {
  if (n < 3) throw std::domain_error("p_poly: n must be >= 3 (got " + std::to_string(n) + ")");
  if (i < 0 || i > n) throw std::domain_error("p_poly: i outside [0, n]");
  const Polynomial w = Polynomial::linear_root(Rational(i));  // z - i
  const Rational c0 = make_rational(i * (n - i), n - 1);
  const Rational c1 = Rational(-(make_rational(n, 2) - i) / (n - 2));
  const Rational c2 = make_rational(2 * n, (n - 1) * (n - 2));
  return Polynomial::constant(c0) + w * c1 + w * w * c2;
}

namespace {

// (z - k)^m by the binomial theorem.
Polynomial shifted_power(long k, unsigned long m) {
  std::vector<Rational> c(m + 1);
  const Rational negk(-k);
  Rational p(1);
  for (unsigned long j = 0; j <= m; ++j) {
    // coefficient of z^(m-j) is C(m, j) (-k)^j
    c[m - j] = binomial(m, j) * p;
    p *= negk;
  }
  return Polynomial(std::move(c));
}

PiecewisePolynomial build(long n, bool weighted) {
  if (n < 4) throw std::domain_error("criterion polynomials need n >= 4 (got " + std::to_string(n) + ")");
  const long count = (n + 1) / 2;  // ceil(n/2)
  std::vector<Polynomial> pieces;
  pieces.reserve(static_cast<std::size_t>(count));
  Polynomial acc;
  for (long k = 0; k < count; ++k) {
    Polynomial term = shifted_power(k, static_cast<unsigned long>(n - 3));
    if (weighted) term *= p_poly(k, n);
    Rational c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (k % 2 == 1) c = -c;
    acc += term * c;
    pieces.push_back(acc);
  }
  return PiecewisePolynomial(0, std::move(pieces), make_rational(n, 2));
}

}  // namespace

PiecewisePolynomial build_S1(long n) { return build(n, true); }

PiecewisePolynomial build_S2(long n) { return build(n, false); }

double z_of_t(long n, double t) {
  const double r = std::sqrt(static_cast<double>(n));
  if (!(t >= 0.0 && t < r / 2)) {
    throw std::domain_error("t must satisfy 0 <= t < sqrt(n)/2 = " + std::to_string(r / 2));
  }
  return static_cast<double>(n) / 2 - t * r;
}

double t_of_z(long n, double z) {
  const double half = static_cast<double>(n) / 2;
  if (!(z > 0.0 && z <= half)) throw std::domain_error("z must satisfy 0 < z <= n/2 = " + std::to_string(half));
  return (half - z) / std::sqrt(static_cast<double>(n));
}

double threshold_z(long n) {
  if (n < 4) throw std::domain_error("threshold_z: n must be >= 4");
  const double x = std::pow(static_cast<double>(n), 1.0 / static_cast<double>(n - 3));
  return std::min((static_cast<double>(n) - 1) / 4, x / (x - 1));
}

ExtremalityKind decide(int s1, std::optional<int> s2, bool diagonal) {
  if (diagonal) {
    if (s1 < 0) return ExtremalityKind::StrictLocalMax;
    if (s1 > 0) return ExtremalityKind::StrictLocalMin;
    return ExtremalityKind::Inconclusive;
  }
  const int b = s2.value_or(0);
  if (s1 == 0 || b == 0) return ExtremalityKind::Inconclusive;
  if (s1 < 0 && b < 0) return ExtremalityKind::StrictLocalMax;
  if (s1 > 0 && b > 0) return ExtremalityKind::StrictLocalMin;
  return ExtremalityKind::NotExtremal;
}

std::optional<int> alt_sum_sign(long l, long n, const Rational& z, const std::vector<Rational>& weights) {
  if (n < 4) throw std::domain_error("alt_sum_sign: n must be >= 4");
  if (l < 0 || !(Rational(l) < z)) throw std::domain_error("alt_sum_sign: need 0 <= l < z");
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), z.get_num_mpz_t(), z.get_den_mpz_t());
  const long top = fl.get_si();
  if (static_cast<long>(weights.size()) <= top) {
    throw std::domain_error("alt_sum_sign: need weights f_0..f_floor(z)");
  }
  for (long i = l; i <= top; ++i) {
    if (sgn(weights[static_cast<std::size_t>(i)]) <= 0) {
      throw std::domain_error("alt_sum_sign: weight f_" + std::to_string(i) + " is not positive");
    }
  }
  const int result = (l % 2 == 0) ? 1 : -1;
  if (l == top) return result;

  const Rational r = make_rational(l + 1, n - l) * weights[static_cast<std::size_t>(l)] /
                     weights[static_cast<std::size_t>(l + 1)];
  // The bound l + 1/(1 - r^(1/(n-3))) is infinite once r >= 1.
  if (r >= 1) return result;
  const Rational gap(z - l);
  if (gap <= 1) return result;
  // gap < 1/(1 - r^(1/m))  <=>  (1 - 1/gap)^m < r
  const Rational base(1 - 1 / gap);
  if (pow(base, static_cast<unsigned long>(n - 3)) < r) return result;
  return std::nullopt;
}

}  // namespace cubesec
