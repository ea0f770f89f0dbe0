#pragma once

// Integrals of slowly decaying oscillatory functions over [0, inf). The range
// [0, U] is covered by fixed-order Gauss panels; the remainder is either
// integrated exactly from a trigonometric expansion of the integrand or bounded
// by an envelope.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cubesec {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  /// Largest admissible cutoff U.
  double max_truncation = 1e7;
  /// Gauss-Legendre points per panel.
  int panel_rule = 16;
  /// Panel width; 0 picks a quarter period of the fastest factor.
  double panel_width = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  /// Cutoff U at which the panel sum stopped.
  double truncation = 0.0;
  /// True when the tail beyond U was integrated exactly rather than bounded.
  bool analytic_tail = false;
};

class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// u^(-power) * (cos_coeff * cos(omega u) + sin_coeff * sin(omega u)), omega >= 0.
struct TrigTerm {
  int power = 0;
  double omega = 0.0;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

/// Finite sum of TrigTerms, closed under products with sin/cos factors.
class TrigSum {
 public:
  static TrigSum one();

  TrigSum& times_sin(double alpha);
  TrigSum& times_cos(double alpha);
  TrigSum& times_power(int k);  ///< multiply by u^(-k)
  TrigSum& scale(double c);
  TrigSum& operator+=(const TrigSum& o);

  double eval(double u) const;
  /// Exact value of the integral over [U, inf). Every term needs power >= 1,
  /// and power >= 2 when omega = 0.
  double tail_integral(double U) const;
  /// Bound on the integral of |f| over [U, inf); requires power >= 2.
  double tail_envelope(double U) const;
  double max_frequency() const;
  int min_power() const;
  const std::vector<TrigTerm>& terms() const { return terms_; }

 private:
  void merge();
  std::vector<TrigTerm> terms_;
};

/// C_m(X) = int_X^inf cos(x) x^-m dx and S_m(X) likewise with sin, X > 0, m >= 1.
void cos_sin_tail_moments(double X, int m, double* C, double* S);

struct TailModel {
  /// Exact tail when present.
  std::optional<TrigSum> expansion;
  /// Bound on the integral of |f| over [U, inf), decreasing in U.
  std::function<double(double)> envelope;
  /// Fastest oscillation of the integrand's factors.
  double max_frequency = 1.0;
};

/// Integral of f over [0, inf).
QuadratureResult integrate_half_line(const std::function<double(double)>& f, const TailModel& tail,
                                     const QuadratureConfig& cfg);

/// Fixed-order Gauss-Legendre rule on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

/// Composite rule: [a, b] split into `panels` equal pieces.
double gauss_composite(const std::function<double(double)>& f, double a, double b, int panels, int order = 16);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace cubesec
