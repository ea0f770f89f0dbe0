#include "cubesec/piecewise.hpp"
#include "cubesec/polynomial.hpp"
#include "cubesec/rational.hpp"
#include "cubesec/roots.hpp"
#include "exactpoly/integer_poly.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace cubesec;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead = Rational(1)) {
  Polynomial p = Polynomial::constant(lead);
  for (const Rational& r : roots) p *= Polynomial::linear_root(r);
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/4") == q(7, 4));
  CHECK(parse_rational(" -3/6 ") == q(-1, 2));
  CHECK(parse_rational("1.75") == q(7, 4));
  CHECK(parse_rational("-2e-3") == q(-1, 500));
  CHECK(parse_rational("12") == q(12));
  CHECK(parse_rational(".5") == q(1, 2));
  // Leading zeros are decimal, not octal.
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(parse_rational("010") == q(10));
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow(q(2, 3), 3) == q(8, 27));
  CHECK(pow10(-3) == q(1, 1000));
  CHECK(from_double(0.1) != q(1, 10));
  CHECK(to_double(from_double(0.1)) == 0.1);
  CHECK(from_double(-0.375) == q(-3, 8));

  CHECK(simplest_between(q(1, 3), q(1, 2)) == q(1, 2));
  CHECK(simplest_between(q(31, 100), q(34, 100)) == q(1, 3));
  CHECK(simplest_between(q(-1, 2), q(1, 3)) == 0);
  CHECK(simplest_between(q(5, 2), q(7, 2)) == 3);
  CHECK(simplest_between(q(-34, 100), q(-31, 100)) == q(-1, 3));

  unsigned long root = 0;
  CHECK(is_perfect_square(49, &root));
  CHECK(root == 7);
  CHECK_FALSE(is_perfect_square(50));
  for (unsigned long n : {2UL, 3UL, 5UL, 10UL, 97UL}) {
    const SqrtBounds b = sqrt_bounds(n, 80);
    CHECK(b.lo * b.lo <= n);
    CHECK(b.hi * b.hi >= n);
    CHECK(b.hi - b.lo <= pow(q(1, 2), 80));
  }
  const SqrtBounds exact = sqrt_bounds(16, 10);
  CHECK(exact.lo == 4);
  CHECK(exact.hi == 4);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::monomial(Rational(1), 1);
  const Polynomial p = x * x - Polynomial::constant(q(2));
  CHECK(p.degree() == 2);
  CHECK(p.eval(q(3)) == 7);
  CHECK(p.eval(1.5) == doctest::Approx(0.25));
  CHECK(p.derivative() == Polynomial({q(0), q(2)}));
  CHECK(p.shift(q(1)) == Polynomial({q(-1), q(2), q(1)}));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(x.pow(3) == Polynomial::monomial(Rational(1), 3));
  CHECK((-p).leading() == -1);
  CHECK(p.coeff(7) == 0);
  CHECK(Polynomial({q(1), q(0), q(0)}).degree() == 0);

  const auto [quo, rem] = divmod(x.pow(3) + Polynomial::constant(q(1)), x + Polynomial::constant(q(1)));
  CHECK(quo == Polynomial({q(1), q(-1), q(1)}));
  CHECK(rem.is_zero());
  CHECK_THROWS(divmod(p, Polynomial()));
}

TEST_CASE("gcd and square-free part") {
  const Polynomial a = from_roots({q(1), q(2), q(2), q(1, 3)}, q(6));
  const Polynomial b = from_roots({q(2), q(5)}, q(-4));
  CHECK(gcd(a, b) == from_roots({q(2)}));
  CHECK(square_free_part(a) == from_roots({q(1), q(2), q(1, 3)}));
  CHECK(gcd(Polynomial(), b) == from_roots({q(2), q(5)}));
  CHECK_THROWS(square_free_part(Polynomial()));
}

TEST_CASE("one-sided signs") {
  const Polynomial p = from_roots({q(1), q(1), q(3)});  // (x-1)^2 (x-3)
  CHECK(sign_right_of(p, q(1)) == -1);
  CHECK(sign_left_of(p, q(1)) == -1);
  CHECK(sign_right_of(p, q(3)) == 1);
  CHECK(sign_left_of(p, q(3)) == -1);
  CHECK(sign_right_of(p, q(2)) == -1);
}

TEST_CASE("interval enclosures contain the range") {
  const Polynomial p = from_roots({q(-1), q(1, 2), q(2)});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-300, 300);
  for (int k = 0; k < 200; ++k) {
    Rational lo = q(num(rng), 100);
    Rational hi = lo + q(std::abs(num(rng)) + 1, 1000);
    const RationalInterval r = p.eval_range(lo, hi);
    const RationalInterval c = p.eval_centered(lo, hi);
    for (int i = 0; i <= 8; ++i) {
      const Rational x = lo + (hi - lo) * q(i, 8);
      const Rational v = p.eval(x);
      CHECK(r.lo <= v);
      CHECK(v <= r.hi);
      CHECK(c.lo <= v);
      CHECK(v <= c.hi);
    }
  }
}

TEST_CASE("integer kernels") {
  using namespace cubesec::detail;
  const Polynomial p = from_roots({q(1, 2), q(3, 4)}, q(8));
  const ZPoly z = to_primitive(p);
  CHECK(content(z) == 1);
  CHECK(to_rational(z) == p);
  CHECK(to_rational(to_primitive(p * q(3, 7))) == p);
  CHECK(sign_at(z, q(5, 8)) == -1);
  CHECK(sign_at(z, q(1, 2)) == 0);
  CHECK(sign_at(z, q(-7)) == 1);

  // Sturm count equals the number of distinct real roots.
  const Polynomial r = from_roots({q(-2), q(1), q(1), q(5, 3)});
  const auto seq = sturm_sequence(to_primitive(r));
  CHECK(sturm_variations(seq, q(-10)) - sturm_variations(seq, q(10)) == 3);

  ZPoly s = {BigInt(-1), BigInt(0), BigInt(1)};  // x^2 - 1
  taylor_shift1(s);                               // x^2 + 2x
  CHECK(s == ZPoly{BigInt(0), BigInt(2), BigInt(1)});
  CHECK(coefficient_variations({BigInt(1), BigInt(-1), BigInt(0), BigInt(2)}) == 2);
  CHECK(unit_interval_variations(to_primitive(from_roots({q(1, 3), q(2, 3)}))) == 2);
  CHECK(unit_interval_variations(to_primitive(from_roots({q(3), q(-1)}))) == 0);
}

TEST_CASE("root isolation: Sturm and Descartes agree with planted roots") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<int> count(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) roots.push_back(q(num(rng), den(rng)));
    if (trial % 3 == 0) roots.push_back(roots.front());  // a double root
    Polynomial p = from_roots(roots, q(trial % 2 ? -3 : 2, 7));
    p *= Polynomial({q(1), q(0), q(1)});  // x^2 + 1 adds no real roots

    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const Rational lo = q(-41);
    const Rational hi = q(41);

    const auto st = isolate_roots(p, lo, hi);
    const auto de = isolate_roots_descartes(p, lo, hi);
    REQUIRE(st.size() == distinct.size());
    REQUIRE(de.size() == distinct.size());
    CHECK(count_roots(p, lo, hi) == distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (const auto* iv : {&st[i], &de[i]}) {
        CHECK(iv->lo <= distinct[i]);
        CHECK(distinct[i] <= iv->hi);
        const IsolatingInterval fine = refine(*iv, pow10(-20));
        CHECK(fine.width() <= pow10(-20));
        CHECK(fine.lo <= distinct[i]);
        CHECK(distinct[i] <= fine.hi);
        const auto snapped = snap_exact(fine);
        REQUIRE(snapped.has_value());
        CHECK(*snapped == distinct[i]);
      }
    }
  }
}

TEST_CASE("irrational roots refine without snapping") {
  const Polynomial p({q(-2), q(0), q(1)});  // x^2 - 2
  const auto roots = isolate_roots(p, q(0), q(10));
  REQUIRE(roots.size() == 1);
  const IsolatingInterval fine = refine(roots[0], pow10(-30));
  CHECK(fine.lo * fine.lo < 2);
  CHECK(fine.hi * fine.hi > 2);
  CHECK_FALSE(snap_exact(fine).has_value());
  CHECK(refine_root(roots[0], pow10(-15)).get_d() == doctest::Approx(1.4142135623730951).epsilon(1e-15));
}

TEST_CASE("isolation input checks") {
  CHECK_THROWS_AS(isolate_roots(Polynomial(), q(0), q(1)), std::domain_error);
  CHECK_THROWS_AS(isolate_roots(Polynomial({q(1), q(1)}), q(1), q(0)), std::domain_error);
  CHECK(isolate_roots(Polynomial::constant(q(3)), q(0), q(1)).empty());
  // Open interval: endpoint roots are excluded.
  CHECK(isolate_roots(from_roots({q(0), q(1)}), q(0), q(1)).empty());
  CHECK(isolate_roots_descartes(from_roots({q(0), q(1)}), q(0), q(1)).empty());
}

TEST_CASE("piecewise polynomial lookup and zeros") {
  // -x on [0,1), x - 2 on [1, 2), (x - 2)(3 - x) on [2, 5/2]
  const PiecewisePolynomial pw(0, {Polynomial({q(0), q(-1)}), Polynomial({q(-2), q(1)}), Polynomial({q(-6), q(5), q(-1)})}, q(5, 2));
  CHECK(pw.piece_index(q(0)) == 0);
  CHECK(pw.piece_index(q(1)) == 1);
  CHECK(pw.piece_index(q(5, 2)) == 2);
  CHECK_THROWS_AS(pw.piece_index(q(3)), std::domain_error);
  CHECK_THROWS_AS(pw.piece_index(q(-1, 2)), std::domain_error);
  CHECK(pw.eval(q(3, 2)) == q(-1, 2));
  CHECK(pw.eval(2.25) == doctest::Approx(0.1875));
  CHECK(pw.piece_lo(2) == 2);
  CHECK(pw.piece_hi(2) == q(5, 2));

  for (RootMethod m : {RootMethod::Descartes, RootMethod::Sturm}) {
    const auto z = zeros(pw, m);
    REQUIRE(z.size() == 1);
    CHECK(z[0].exact());
    CHECK(z[0].lo == 2);
    const auto pattern = sign_pattern(pw, m);
    CHECK(nonzero_signs(pattern) == std::vector<int>{-1, 1});
    CHECK(describe(pattern) == "-, 0 at 2, +");
  }
}

TEST_CASE("sign pattern merges sign-preserving breakpoints and reports interior roots") {
  // x^2 - 1/4 on [0,1), then 1 on [1, 3/2]
  const PiecewisePolynomial pw(0, {Polynomial({q(-1, 4), q(0), q(1)}), Polynomial::constant(q(1))}, q(3, 2));
  const auto pattern = sign_pattern(pw);
  CHECK(nonzero_signs(pattern) == std::vector<int>{-1, 1});
  REQUIRE(pattern.size() == 3);
  CHECK(pattern[1].sign == 0);
  CHECK(pattern[1].from.lo <= q(1, 2));
  CHECK(q(1, 2) <= pattern[1].from.hi);
}

TEST_CASE("degenerate piece is rejected") {
  const PiecewisePolynomial pw(0, {Polynomial({q(1)}), Polynomial()}, q(2));
  CHECK_THROWS_AS(zeros(pw), DegeneratePiece);
}
