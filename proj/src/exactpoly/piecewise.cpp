#include "cubesec/piecewise.hpp"

#include <cmath>
#include <iomanip>
#include <memory>
#include <sstream>

namespace cubesec {

PiecewisePolynomial::PiecewisePolynomial(long lower, std::vector<Polynomial> pieces, Rational domain_end)
    : lower_(lower), pieces_(std::move(pieces)), domain_end_(std::move(domain_end)) {
  if (pieces_.empty()) throw std::invalid_argument("PiecewisePolynomial: no pieces");
  const Rational last_lo(lower_ + static_cast<long>(pieces_.size()) - 1);
  if (!(domain_end_ > last_lo) || domain_end_ > last_lo + 1) {
    throw std::invalid_argument("PiecewisePolynomial: domain end " + domain_end_.get_str() +
                                " does not fall in the last piece");
  }
}

std::size_t PiecewisePolynomial::piece_index(const Rational& z) const {
  if (z < lower_ || z > domain_end_) {
    throw std::domain_error("z = " + z.get_str() + " outside [" + std::to_string(lower_) + ", " +
                            domain_end_.get_str() + "]");
  }
  if (z == domain_end_) return pieces_.size() - 1;
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), z.get_num_mpz_t(), z.get_den_mpz_t());
  const long k = fl.get_si() - lower_;
  return std::min(static_cast<std::size_t>(k), pieces_.size() - 1);
}

Rational PiecewisePolynomial::eval(const Rational& z) const { return pieces_[piece_index(z)].eval(z); }

double PiecewisePolynomial::eval(double z) const {
  const double end = domain_end_.get_d();
  if (!(z >= static_cast<double>(lower_) && z <= end)) {
    throw std::domain_error("z outside the piecewise domain");
  }
  std::size_t k = pieces_.size() - 1;
  if (z < end) k = std::min(k, static_cast<std::size_t>(std::floor(z) - static_cast<double>(lower_)));
  return pieces_[k].eval(z);
}

Rational PiecewisePolynomial::piece_lo(std::size_t k) const { return Rational(lower_ + static_cast<long>(k)); }

Rational PiecewisePolynomial::piece_hi(std::size_t k) const {
  Rational hi(lower_ + static_cast<long>(k) + 1);
  return hi < domain_end_ ? hi : domain_end_;
}

namespace {

IsolatingInterval point(const std::shared_ptr<const Polynomial>& poly, const Rational& x, int left, int right) {
  IsolatingInterval iv;
  iv.lo = x;
  iv.hi = x;
  iv.poly = poly;
  iv.sign_left = left;
  iv.sign_right = right;
  return iv;
}

struct Separator {
  IsolatingInterval at;
  bool zero;
};

std::vector<Separator> separators(const PiecewisePolynomial& pw, RootMethod method) {
  std::vector<std::shared_ptr<const Polynomial>> polys;
  for (std::size_t k = 0; k < pw.piece_count(); ++k) {
    if (pw.pieces()[k].is_zero()) throw DegeneratePiece(k);
    polys.push_back(std::make_shared<const Polynomial>(pw.pieces()[k]));
  }
  std::vector<Separator> out;
  for (std::size_t k = 0; k < pw.piece_count(); ++k) {
    const Polynomial& p = *polys[k];
    const Rational lo = pw.piece_lo(k);
    const Rational hi = pw.piece_hi(k);
    std::vector<IsolatingInterval> inner = method == RootMethod::Sturm ? isolate_roots(p, lo, hi)
                                                                       : isolate_roots_descartes(p, lo, hi);
    for (IsolatingInterval& iv : inner) out.push_back({std::move(iv), true});

    if (hi == pw.domain_end()) {
      const bool z = sgn(p.eval(hi)) == 0;
      out.push_back({point(polys[k], hi, sign_left_of(p, hi), z ? -sign_left_of(p, hi) : sgn(p.eval(hi))), z});
    } else {
      const Polynomial& next = *polys[k + 1];
      const bool z = sgn(next.eval(hi)) == 0;
      out.push_back({point(polys[k + 1], hi, sign_left_of(p, hi), sign_right_of(next, hi)), z});
    }
  }
  return out;
}

RealPoint real_point(const IsolatingInterval& iv) { return RealPoint{iv.lo, iv.hi}; }

}  // namespace

std::vector<IsolatingInterval> zeros(const PiecewisePolynomial& pw, RootMethod method) {
  std::vector<IsolatingInterval> out;
  for (Separator& s : separators(pw, method)) {
    if (s.zero) out.push_back(std::move(s.at));
  }
  return out;
}

std::vector<SignSegment> sign_pattern(const PiecewisePolynomial& pw, RootMethod method) {
  std::vector<Separator> seps = separators(pw, method);
  std::vector<SignSegment> raw;
  IsolatingInterval prev;
  prev.lo = prev.hi = Rational(pw.lower());
  for (const Separator& s : seps) {
    // No zero lies strictly between prev and s. The interval signs refer to
    // the square-free part, so read the sign off the piece itself.
    const int sign = prev.hi < s.at.lo ? sgn(pw.eval(Rational((prev.hi + s.at.lo) / 2)))
                                       : sign_right_of(pw.piece_at(prev.hi), prev.hi);
    raw.push_back({real_point(prev), real_point(s.at), sign});
    if (s.zero) raw.push_back({real_point(s.at), real_point(s.at), 0});
    prev = s.at;
  }

  std::vector<SignSegment> merged;
  for (SignSegment& seg : raw) {
    if (!merged.empty() && seg.sign != 0 && merged.back().sign == seg.sign) {
      merged.back().to = seg.to;
    } else {
      merged.push_back(std::move(seg));
    }
  }
  return merged;
}

std::vector<int> nonzero_signs(const std::vector<SignSegment>& pattern) {
  std::vector<int> out;
  for (const SignSegment& s : pattern) {
    if (s.sign != 0) out.push_back(s.sign);
  }
  return out;
}

std::string describe(const std::vector<SignSegment>& pattern) {
  std::ostringstream out;
  out << std::setprecision(8);
  bool first = true;
  for (const SignSegment& s : pattern) {
    if (!first) out << ", ";
    first = false;
    if (s.sign != 0) {
      out << (s.sign > 0 ? "+" : "-");
    } else if (s.from.exact()) {
      out << "0 at " << s.from.lo.get_str();
    } else {
      out << "0 in [" << s.from.lo.get_d() << ", " << s.from.hi.get_d() << "]";
    }
  }
  return out.str();
}

}  // namespace cubesec
