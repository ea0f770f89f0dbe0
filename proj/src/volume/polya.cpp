#include "cubesec/volume.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cubesec {

namespace {

// Beyond this many active coordinates the trigonometric expansion has too many
// terms; the u^-k envelope is then small enough on its own.
constexpr std::size_t kMaxExpandedFactors = 10;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

QuadratureResult polya_volume(const SectionQuery& q, const QuadratureConfig& cfg) {
  q.validate();
  const std::vector<double> c = q.direction.active_coords();
  const std::size_t k = c.size();
  if (k < 2) throw DegenerateSection("integral formula needs at least two non-zero coordinates");
  const double t = q.t;
  const double pi_a = q.direction.pi();

  auto f = [&](double u) {
    double p = std::cos(2 * t * u);
    for (double x : c) p *= sinc(x * u);
    return p;
  };

  TailModel tail;
  const int power = static_cast<int>(k);
  tail.envelope = [=](double U) { return std::pow(U, 1 - power) / ((power - 1) * pi_a); };
  tail.max_frequency = std::max(*std::max_element(c.begin(), c.end()), 2 * t);
  if (k <= kMaxExpandedFactors) {
    TrigSum e = TrigSum::one();
    for (double x : c) e.times_sin(x);
    if (t != 0.0) e.times_cos(2 * t);
    e.times_power(power).scale(1 / pi_a);
    tail.expansion = std::move(e);
  }

  QuadratureResult r = integrate_half_line(f, tail, cfg);
  const double scale = 2 * q.direction.norm() / std::numbers::pi;
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

}  // namespace cubesec
