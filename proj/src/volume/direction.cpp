#include "cubesec/volume.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cubesec {

Direction Direction::subdiagonal(long n, long d) {
  if (n < 1 || d < n) throw std::domain_error("subdiagonal: need 1 <= n <= d");
  Direction dir;
  dir.a.assign(static_cast<std::size_t>(d), 0.0);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (long i = 0; i < n; ++i) dir.a[static_cast<std::size_t>(i)] = c;
  return dir;
}

std::size_t Direction::active() const {
  std::size_t k = 0;
  for (double x : a) k += x != 0.0;
  return k;
}

std::vector<double> Direction::active_coords() const {
  std::vector<double> c;
  for (double x : a) {
    if (x != 0.0) c.push_back(x);
  }
  return c;
}

double Direction::norm() const {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

double Direction::sigma() const {
  CompensatedSum s;
  for (double x : a) s.add(x);
  return s.value();
}

double Direction::pi() const {
  double p = 1.0;
  for (double x : a) {
    if (x != 0.0) p *= x;
  }
  return p;
}

void Direction::validate() const {
  if (a.empty()) throw std::domain_error("direction has no coordinates");
  for (double x : a) {
    if (!std::isfinite(x) || x < 0) throw std::domain_error("direction coordinates must be finite and >= 0");
  }
  if (active() == 0) throw std::domain_error("direction must be non-zero");
}

void SectionQuery::validate() const {
  direction.validate();
  const double bound = std::sqrt(static_cast<double>(direction.dim())) / 2;
  if (!std::isfinite(t) || t < 0 || t >= bound) {
    throw std::domain_error("t must satisfy 0 <= t < sqrt(d)/2 = " + std::to_string(bound) + " (got " +
                            std::to_string(t) + ")");
  }
}

SqrtMultiple SqrtMultiple::make(Rational coeff, unsigned long radicand) {
  SqrtMultiple s;
  s.coeff = std::move(coeff);
  s.radicand = radicand;
  if (radicand == 0) {
    s.coeff = 0;
    s.radicand = 1;
    return s;
  }
  for (unsigned long f = 2; f * f <= s.radicand;) {
    if (s.radicand % (f * f) == 0) {
      s.radicand /= f * f;
      s.coeff *= f;
    } else {
      ++f;
    }
  }
  return s;
}

double SqrtMultiple::value() const { return coeff.get_d() * std::sqrt(static_cast<double>(radicand)); }

}  // namespace cubesec
