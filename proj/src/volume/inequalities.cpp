#include "cubesec/volume.hpp"

#include <cmath>
#include <numbers>

namespace cubesec {

namespace {

// Below this the closed forms lose digits to cancellation (the bracket is O(s^4)).
constexpr double kSeriesCutoff = 0.5;

// Sum over i >= 2 of (-1)^i c(i) x^(2i) / (2i+2)! style series, x = 2s; the
// caller supplies the coefficient of x^(2i).
template <class Coeff>
double even_series(double s, Coeff coeff) {
  const double x2 = 4 * s * s;
  double power = x2 * x2;  // x^4
  double sum = 0.0;
  for (int i = 2; i < 60; ++i) {
    const double term = ((i % 2) ? -1.0 : 1.0) * coeff(i) * power;
    sum += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
    power *= x2;
  }
  return sum;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double sinc_bracket(double s) {
  if (std::fabs(s) < kSeriesCutoff) {
    return -even_series(s, [](int i) { return (2.0 * i - 2) / factorial(2 * i + 2); });
  }
  return (1 - std::cos(2 * s)) / (s * s) - std::sin(2 * s) / (2 * s) - 1;
}

double sinc_bracket_scaled(long n, double s) { return sinc_bracket(s) / std::pow(s, static_cast<double>(n - 2)); }

double sinc_bracket_slope_numerator(long n, double s) {
  const double nd = static_cast<double>(n);
  if (std::fabs(s) < 1.0) {
    // n A + B term by term: A's and B's leading terms cancel for small n.
    return even_series(s, [nd](int i) {
      return nd * (2.0 * i - 2) / factorial(2 * i + 2) + 3.0 / factorial(2 * i + 1) - 1.0 / factorial(2 * i);
    });
  }
  const double A = -sinc_bracket(s);
  const double B = 3 * std::sin(2 * s) / (2 * s) - std::cos(2 * s) - 2;
  return nd * A + B;
}

double quintic_sinc_integral() {
  auto f = [](double s) {
    const double c = s == 0.0 ? 1.0 : std::sin(s) / s;
    return 2 * std::pow(c, 5) - std::cos(s) * std::pow(c, 4) - std::pow(c, 3);
  };
  return gauss_composite(f, 0.0, 2 * std::numbers::pi, 64, 16);
}

}  // namespace cubesec
