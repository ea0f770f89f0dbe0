#pragma once

// Volume of the section of [0,1]^d by the hyperplane a.x = b, b = sigma(a)/2 - t,
// and its derivatives in a, by a finite vertex sum and by a Polya-type integral.

#include "cubesec/quadrature.hpp"
#include "cubesec/rational.hpp"

#include <cstddef>
#include <vector>

namespace cubesec {

struct Direction {
  /// Non-negative coordinates in R^d, not all zero.
  std::vector<double> a;

  /// First n coordinates 1/sqrt(n), the rest zero.
  static Direction subdiagonal(long n, long d);

  std::size_t dim() const { return a.size(); }
  std::size_t active() const;
  std::vector<double> active_coords() const;
  double norm() const;
  double sigma() const;
  /// Product of the nonzero coordinates.
  double pi() const;
  /// Throws std::domain_error on negative, non-finite or all-zero input.
  void validate() const;
};

struct SectionQuery {
  Direction direction;
  double t = 0.0;

  double b() const { return direction.sigma() / 2 - t; }
  /// Throws std::domain_error unless 0 <= t < sqrt(d)/2 and the direction is valid.
  void validate() const;
};

class DegenerateSection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class SumMode {
  /// Double terms with Neumaier summation.
  Compensated,
  /// Inputs taken as exact binary rationals, summed exactly, rounded once.
  Exact
};

/// Alternating sum over the vertices v of the active block with a.v <= b.
/// Throws DegenerateSection when fewer than two coordinates are active.
double vertex_sum_volume(const SectionQuery& q, SumMode mode = SumMode::Compensated);
/// Same sum for an arbitrary offset b (no range check on b).
double vertex_sum_volume_b(const Direction& a, double b, SumMode mode = SumMode::Compensated);

/// (|a|/pi) int Prod sinc(a_i u) cos(2tu) du over the real line.
QuadratureResult polya_volume(const SectionQuery& q, const QuadratureConfig& cfg = {});

/// c * sqrt(radicand) with radicand square-free.
struct SqrtMultiple {
  Rational coeff;
  unsigned long radicand = 1;

  static SqrtMultiple make(Rational coeff, unsigned long radicand);
  double value() const;
};

/// Volume at the order-n sub-diagonal direction as a function of z = n/2 - t sqrt(n).
SqrtMultiple subdiagonal_volume(long n, const Rational& z);
double subdiagonal_volume(long n, double t);

/// d/da_j of V/|a| (1-based j). Zero for inactive coordinates. Throws
/// std::domain_error with fewer than three active coordinates.
double grad_sum(const SectionQuery& q, std::size_t j);

/// The Hessian combination d2/da1^2 - sqrt(n) d/da1 - d2/da1da2 of V/|a| at the
/// order-n symmetric point: (sqrt(n)/(n-3)!) S1(z).
SqrtMultiple hessian_combo_sum(long n, const Rational& z);
/// d2(V/|a|)/da_d^2 at the symmetric point of an order-n sub-diagonal, n < d:
/// (n sqrt(n)/(12 (n-3)!)) S2(z).
SqrtMultiple hessian_outside_sum(long n, const Rational& z);

/// Integral forms of the two quantities above, as functions of t.
QuadratureResult q1_integral(long n, double t, const QuadratureConfig& cfg = {});
QuadratureResult q2_integral(long n, double t, const QuadratureConfig& cfg = {});

/// Integral of V over all t; equals |a| (one for unit directions).
double fubini_integral(const Direction& a);

// Scalar inequalities behind the small-t negativity argument.

/// (1 - cos 2s)/s^2 - sin(2s)/(2s) - 1, by its power series for small s.
double sinc_bracket(double s);
/// sinc_bracket(s) / s^(n-2).
double sinc_bracket_scaled(long n, double s);
/// n A + B with A = -sinc_bracket(s), B = 3 sin(2s)/(2s) - cos(2s) - 2; the
/// derivative of sinc_bracket_scaled is this over s^(n-1).
double sinc_bracket_slope_numerator(long n, double s);
/// int_0^{2 pi} (2 sin^5/s^5 - cos sin^4/s^4 - sin^3/s^3) ds
double quintic_sinc_integral();

}  // namespace cubesec
