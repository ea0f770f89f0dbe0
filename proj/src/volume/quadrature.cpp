#include "cubesec/quadrature.hpp"

#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace cubesec {

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const Rule& rule(int order) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(order));
  if (t == nullptr) throw std::runtime_error("gauss_legendre: cannot build rule of order " + std::to_string(order));
  Rule r;
  for (std::size_t i = 0; i < static_cast<std::size_t>(order); ++i) {
    double x = 0, w = 0;
    gsl_integration_glfixed_point(-1.0, 1.0, i, &x, &w, t);
    r.nodes.push_back(x);
    r.weights.push_back(w);
  }
  gsl_integration_glfixed_table_free(t);
  return cache.emplace(order, std::move(r)).first->second;
}

double apply(const Rule& r, const std::function<double(double)>& f, double a, double b) {
  const double half = (b - a) / 2;
  const double mid = (a + b) / 2;
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
  return apply(rule(order), f, a, b);
}

double gauss_composite(const std::function<double(double)>& f, double a, double b, int panels, int order) {
  const Rule& r = rule(order);
  const double w = (b - a) / panels;
  CompensatedSum acc;
  for (int i = 0; i < panels; ++i) acc.add(apply(r, f, a + i * w, a + (i + 1) * w));
  return acc.value();
}

TrigSum TrigSum::one() {
  TrigSum s;
  s.terms_.push_back({0, 0.0, 1.0, 0.0});
  return s;
}

namespace {

// Frequencies that cancel up to rounding are treated as exactly zero.
double snap(double omega, double scale) { return std::fabs(omega) <= 1e-12 * scale ? 0.0 : omega; }

void push(std::vector<TrigTerm>& out, int power, double omega, double c, double s) {
  if (omega < 0) {
    omega = -omega;
    s = -s;
  }
  if (omega == 0.0) s = 0.0;
  if (c == 0.0 && s == 0.0) return;
  out.push_back({power, omega, c, s});
}

}  // namespace

TrigSum& TrigSum::times_sin(double alpha) {
  std::vector<TrigTerm> out;
  out.reserve(terms_.size() * 2);
  for (const TrigTerm& t : terms_) {
    const double scale = std::fabs(t.omega) + std::fabs(alpha);
    const double plus = snap(t.omega + alpha, scale);
    const double minus = snap(t.omega - alpha, scale);
    // cos(w)sin(a) = [sin(w+a) - sin(w-a)]/2 ; sin(w)sin(a) = [cos(w-a) - cos(w+a)]/2
    push(out, t.power, plus, -t.sin_coeff / 2, t.cos_coeff / 2);
    push(out, t.power, minus, t.sin_coeff / 2, -t.cos_coeff / 2);
  }
  terms_ = std::move(out);
  merge();
  return *this;
}

TrigSum& TrigSum::times_cos(double alpha) {
  std::vector<TrigTerm> out;
  out.reserve(terms_.size() * 2);
  for (const TrigTerm& t : terms_) {
    const double scale = std::fabs(t.omega) + std::fabs(alpha);
    const double plus = snap(t.omega + alpha, scale);
    const double minus = snap(t.omega - alpha, scale);
    // cos(w)cos(a) = [cos(w+a) + cos(w-a)]/2 ; sin(w)cos(a) = [sin(w+a) + sin(w-a)]/2
    push(out, t.power, plus, t.cos_coeff / 2, t.sin_coeff / 2);
    push(out, t.power, minus, t.cos_coeff / 2, t.sin_coeff / 2);
  }
  terms_ = std::move(out);
  merge();
  return *this;
}

TrigSum& TrigSum::times_power(int k) {
  for (TrigTerm& t : terms_) t.power += k;
  return *this;
}

TrigSum& TrigSum::scale(double c) {
  for (TrigTerm& t : terms_) {
    t.cos_coeff *= c;
    t.sin_coeff *= c;
  }
  return *this;
}

TrigSum& TrigSum::operator+=(const TrigSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  merge();
  return *this;
}

void TrigSum::merge() {
  std::sort(terms_.begin(), terms_.end(), [](const TrigTerm& a, const TrigTerm& b) {
    return a.power != b.power ? a.power < b.power : a.omega < b.omega;
  });
  std::vector<TrigTerm> out;
  for (const TrigTerm& t : terms_) {
    if (!out.empty() && out.back().power == t.power &&
        std::fabs(out.back().omega - t.omega) <= 1e-12 * (1.0 + t.omega)) {
      out.back().cos_coeff += t.cos_coeff;
      out.back().sin_coeff += t.sin_coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const TrigTerm& t) { return t.cos_coeff == 0.0 && t.sin_coeff == 0.0; });
  terms_ = std::move(out);
}

double TrigSum::eval(double u) const {
  double s = 0.0;
  for (const TrigTerm& t : terms_) {
    s += std::pow(u, -t.power) * (t.cos_coeff * std::cos(t.omega * u) + t.sin_coeff * std::sin(t.omega * u));
  }
  return s;
}

void cos_sin_tail_moments(double X, int m, double* C, double* S) {
  if (!(X > 0) || m < 1) throw std::domain_error("cos_sin_tail_moments: need X > 0 and m >= 1");
  double c = -gsl_sf_Ci(X);
  double s = std::numbers::pi / 2 - gsl_sf_Si(X);
  const double cx = std::cos(X);
  const double sx = std::sin(X);
  double xk = X;  // X^k
  for (int k = 1; k < m; ++k) {
    const double c_next = (cx / xk - s) / k;
    const double s_next = (sx / xk + c) / k;
    c = c_next;
    s = s_next;
    xk *= X;
  }
  *C = c;
  *S = s;
}

double TrigSum::tail_integral(double U) const {
  CompensatedSum acc;
  for (const TrigTerm& t : terms_) {
    if (t.power < 1) throw std::domain_error("tail_integral: non-decaying term");
    if (t.omega == 0.0) {
      if (t.power < 2) throw std::domain_error("tail_integral: divergent term u^-1");
      acc.add(t.cos_coeff * std::pow(U, 1 - t.power) / (t.power - 1));
      continue;
    }
    double C = 0, S = 0;
    cos_sin_tail_moments(t.omega * U, t.power, &C, &S);
    const double f = std::pow(t.omega, t.power - 1);
    acc.add(f * (t.cos_coeff * C + t.sin_coeff * S));
  }
  return acc.value();
}

double TrigSum::tail_envelope(double U) const {
  double s = 0.0;
  for (const TrigTerm& t : terms_) {
    if (t.power < 2) throw std::domain_error("tail_envelope: needs decay faster than u^-1");
    s += (std::fabs(t.cos_coeff) + std::fabs(t.sin_coeff)) * std::pow(U, 1 - t.power) / (t.power - 1);
  }
  return s;
}

double TrigSum::max_frequency() const {
  double w = 0.0;
  for (const TrigTerm& t : terms_) w = std::max(w, t.omega);
  return w;
}

int TrigSum::min_power() const {
  int p = terms_.empty() ? 0 : terms_.front().power;
  for (const TrigTerm& t : terms_) p = std::min(p, t.power);
  return p;
}

namespace {

// Tail target when the remainder is integrated exactly: only rounding in the
// expansion matters, so a loose envelope keeps U (and the panel count) small.
constexpr double kAnalyticTailTarget = 1e-2;

QuadratureResult integrate_once(const std::function<double(double)>& f, const TailModel& tail,
                                const QuadratureConfig& cfg, double width) {
  const bool analytic = tail.expansion.has_value();
  const double target = analytic ? std::max(kAnalyticTailTarget, cfg.abs_tol) : cfg.abs_tol / 4;
  double U = 8 * width;
  while (tail.envelope(U) > target) {
    if (U >= cfg.max_truncation) {
      if (analytic) break;
      throw AccuracyError("tail bound " + std::to_string(tail.envelope(U)) + " exceeds tolerance " +
                          std::to_string(target) + " at the maximal truncation " +
                          std::to_string(cfg.max_truncation));
    }
    U = std::min(2 * U, cfg.max_truncation);
  }
  const long panels = static_cast<long>(std::ceil(U / width));
  U = static_cast<double>(panels) * width;

  const Rule& hi = rule(cfg.panel_rule);
  const Rule& lo = rule(cfg.panel_rule > 10 ? 10 : std::max(2, cfg.panel_rule / 2));
  CompensatedSum acc;
  double err = 0.0;
  for (long i = 0; i < panels; ++i) {
    const double a = static_cast<double>(i) * width;
    const double b = a + width;
    const double g = apply(hi, f, a, b);
    acc.add(g);
    err += std::fabs(g - apply(lo, f, a, b));
  }
  QuadratureResult r;
  r.truncation = U;
  r.analytic_tail = analytic;
  if (analytic) {
    acc.add(tail.expansion->tail_integral(U));
    err += 1e-15 * tail.expansion->tail_envelope(U);
  } else {
    err += tail.envelope(U);
  }
  r.value = acc.value();
  r.error_estimate = err;
  return r;
}

}  // namespace

QuadratureResult integrate_half_line(const std::function<double(double)>& f, const TailModel& tail,
                                     const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0)) throw std::domain_error("quadrature: abs_tol must be positive");
  if (cfg.panel_rule < 2) throw std::domain_error("quadrature: panel rule needs at least 2 points");
  if (!(tail.max_frequency > 0)) throw std::domain_error("quadrature: max frequency must be positive");
  double width = cfg.panel_width > 0 ? cfg.panel_width : std::numbers::pi / (4 * tail.max_frequency);
  QuadratureResult r = integrate_once(f, tail, cfg, width);
  for (int i = 0; i < 3 && cfg.panel_width <= 0 && r.error_estimate > cfg.abs_tol; ++i) {
    width /= 2;
    r = integrate_once(f, tail, cfg, width);
  }
  return r;
}

}  // namespace cubesec
