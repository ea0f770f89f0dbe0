#pragma once

#include "cubesec/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cubesec {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational width() const { return Rational(hi - lo); }
};

/// Dense univariate polynomial with rational coefficients in ascending degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);
  /// x - r
  static Polynomial linear_root(const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  /// Interval Horner enclosure of {p(x) : x in [lo, hi]}.
  RationalInterval eval_range(const Rational& lo, const Rational& hi) const;
  /// Mean-value enclosure p(m) + p'([lo, hi]) * ([lo, hi] - m); tighter for narrow intervals.
  RationalInterval eval_centered(const Rational& lo, const Rational& hi) const;

  Polynomial derivative() const;
  /// p(x + a)
  Polynomial shift(const Rational& a) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; zero only when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic. Throws on the zero polynomial.
Polynomial square_free_part(const Polynomial& p);

/// Sign of p on (x, x + delta) for all small delta > 0. Throws on the zero polynomial.
int sign_right_of(const Polynomial& p, const Rational& x);
/// Sign of p on (x - delta, x) for all small delta > 0.
int sign_left_of(const Polynomial& p, const Rational& x);

}  // namespace cubesec
