#pragma once

#include "cubesec/roots.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cubesec {

class DegeneratePiece : public std::runtime_error {
 public:
  explicit DegeneratePiece(std::size_t index)
      : std::runtime_error("degenerate piece: piece " + std::to_string(index) + " is identically zero"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Polynomial pieces on [lower + k, lower + k + 1), truncated at domain_end.
/// A breakpoint belongs to the piece on its right, except domain_end, which
/// belongs to the last piece.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(long lower, std::vector<Polynomial> pieces, Rational domain_end);

  long lower() const { return lower_; }
  const Rational& domain_end() const { return domain_end_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  /// Index of the piece that owns z. Throws std::domain_error outside [lower, domain_end].
  std::size_t piece_index(const Rational& z) const;
  const Polynomial& piece_at(const Rational& z) const { return pieces_[piece_index(z)]; }

  Rational eval(const Rational& z) const;
  double eval(double z) const;

  /// Left end and right end of piece k within the domain.
  Rational piece_lo(std::size_t k) const;
  Rational piece_hi(std::size_t k) const;

 private:
  long lower_;
  std::vector<Polynomial> pieces_;
  Rational domain_end_;
};

enum class RootMethod { Descartes, Sturm };

/// Every zero of pw in (lower, domain_end], in increasing order. Breakpoint
/// zeros are reported exactly; interior zeros as isolating intervals of their piece.
/// Throws DegeneratePiece when a piece is the zero polynomial.
std::vector<IsolatingInterval> zeros(const PiecewisePolynomial& pw, RootMethod method = RootMethod::Descartes);

/// A real number given by a rational enclosure; exact when lo == hi.
struct RealPoint {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  double approx() const { return Rational((lo + hi) / 2).get_d(); }
};

/// Constant-sign stretch of the domain. Zeros appear as point segments (from == to, sign 0).
struct SignSegment {
  RealPoint from;
  RealPoint to;
  int sign;
};

/// Maximal constant-sign segments covering (lower, domain_end].
std::vector<SignSegment> sign_pattern(const PiecewisePolynomial& pw, RootMethod method = RootMethod::Descartes);

/// Signs of the nonzero segments, in order, e.g. {-1, +1, -1}.
std::vector<int> nonzero_signs(const std::vector<SignSegment>& pattern);

/// Signs and zeros in order, e.g. "-, 0 at 3/4, +, 0 in [1, 2], -".
std::string describe(const std::vector<SignSegment>& pattern);

}  // namespace cubesec
