#pragma once

// Extremality criteria for sections orthogonal to a diagonal (n = d) or to an
// order-n sub-diagonal (n < d) of [0,1]^d. Everything is written in the
// variable z = n/2 - t*sqrt(n), 0 < z <= n/2.

#include "cubesec/piecewise.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubesec {

struct SubdiagonalSpec {
  long n = 0;
  long d = 0;

  bool diagonal() const { return n == d; }
  /// Throws std::domain_error unless 4 <= n <= d.
  void validate() const;
};

enum class ExtremalityKind { StrictLocalMax, StrictLocalMin, NotExtremal, Inconclusive };

std::string to_string(ExtremalityKind kind);

struct Extremality {
  ExtremalityKind kind = ExtremalityKind::Inconclusive;
  int s1_sign = 0;
  /// Absent on the diagonal, where only S1 matters.
  std::optional<int> s2_sign;
  /// Exact z, or the midpoint of a certified enclosure when z is irrational.
  Rational z;
  bool z_exact = true;
  double t = 0.0;
};

/// Quadratic weight i(n-i)/(n-1) - (n/2-i)(z-i)/(n-2) + 2n(z-i)^2/((n-1)(n-2)).
/// Throws std::domain_error for n < 3 or i outside [0, n].
Polynomial p_poly(long i, long n);

/// Pieces sum_{i<=k} (-1)^i C(n,i) (z-i)^(n-3) p_{i,n}(z) on [k, k+1), domain (0, n/2].
PiecewisePolynomial build_S1(long n);
/// Same sum without the quadratic weight.
PiecewisePolynomial build_S2(long n);

/// z = n/2 - t*sqrt(n). Throws std::domain_error unless 0 <= t < sqrt(n)/2.
double z_of_t(long n, double t);
/// t = (n/2 - z)/sqrt(n). Throws std::domain_error unless 0 < z <= n/2.
double t_of_z(long n, double z);

/// min{(n-1)/4, n^(1/(n-3)) / (n^(1/(n-3)) - 1)}; below it S1 < 0 and S2 > 0.
double threshold_z(long n);

/// Decision table. s2 is ignored on the diagonal.
ExtremalityKind decide(int s1, std::optional<int> s2, bool diagonal);

/// Exact classification at a rational z in (0, n/2].
Extremality classify_at_z(const SubdiagonalSpec& spec, const Rational& z);

/// Classification at distance t. When sqrt(n) is irrational, signs come from
/// interval evaluation at increasing precision; a sign whose enclosure still
/// straddles zero once z is enclosed to width below eps is reported as 0 (Inconclusive).
Extremality classify(const SubdiagonalSpec& spec, const Rational& t, const Rational& eps);
Extremality classify(const SubdiagonalSpec& spec, double t);

/// Default enclosure width below which a sign is declared undecidable.
Rational default_classify_eps();

/// Sufficient condition for the sign of sum_{i=l}^{floor z} (-1)^i C(n,i) (z-i)^(n-3) f_i
/// to be (-1)^l. weights[i] = f_i for i = 0..floor(z). Returns nullopt when the
/// condition fails. Throws std::domain_error for non-positive weights or l outside [0, z).
std::optional<int> alt_sum_sign(long l, long n, const Rational& z, const std::vector<Rational>& weights);

}  // namespace cubesec
