#include "cubesec/criterion.hpp"

#include "support/oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace cubesec;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("quadratic weights") {
  CHECK(p_poly(0, 4) == Polynomial({q(0), q(-1), q(4, 3)}));
  CHECK(p_poly(1, 5).eval(q(2)) == q(4, 3));
  for (long n = 4; n <= 12; ++n) {
    for (long i = 0; i <= n; ++i) {
      CHECK(p_poly(i, n).eval(q(i)) == q(i * (n - i), n - 1));
      CHECK(p_poly(i, n).eval(q(7, 3)) == oracle::weight(i, n, q(7, 3)));
    }
  }
  CHECK_THROWS_AS(p_poly(0, 2), std::domain_error);
  CHECK_THROWS_AS(p_poly(5, 4), std::domain_error);
  CHECK_THROWS_AS(p_poly(-1, 4), std::domain_error);
}

TEST_CASE("criterion pieces match the frozen oracle") {
  for (const auto& f : oracle::frozen_pieces()) {
    CAPTURE(f.n);
    CAPTURE(f.k);
    CAPTURE(f.s1);
    const PiecewisePolynomial pw = f.s1 ? build_S1(f.n) : build_S2(f.n);
    REQUIRE(pw.piece_count() == static_cast<std::size_t>((f.n + 1) / 2));
    CHECK(pw.pieces().at(f.k) == Polynomial(f.c));
  }
}

TEST_CASE("criterion domain") {
  const PiecewisePolynomial s1 = build_S1(7);
  CHECK(s1.lower() == 0);
  CHECK(s1.domain_end() == q(7, 2));
  CHECK(build_S2(8).piece_count() == 4);
  CHECK_THROWS_AS(build_S1(3), std::domain_error);
  CHECK_THROWS_AS(build_S2(2), std::domain_error);
}

TEST_CASE("point values") {
  CHECK(build_S1(4).eval(q(2)) == q(-2, 3));
  CHECK(build_S1(5).eval(q(3, 2)) == q(5, 24));
  CHECK(build_S1(4).eval(q(3, 2)) == q(1, 12));
  CHECK(build_S1(4).eval(q(7, 4)) == q(-1, 24));
  CHECK(build_S2(4).eval(q(7, 4)) == q(-5, 4));
  CHECK(build_S2(4).eval(q(1, 2)) == q(1, 2));
  CHECK(build_S1(5).eval(q(1)) == 0);
}

TEST_CASE("S1 and S2 agree with vertex enumeration") {
  std::mt19937_64 rng(3);
  for (long n = 4; n <= 12; ++n) {
    const PiecewisePolynomial s1 = build_S1(n);
    const PiecewisePolynomial s2 = build_S2(n);
    std::uniform_int_distribution<long> num(1, 50 * n);
    for (int k = 0; k < 15; ++k) {
      const Rational z = q(num(rng), 100);
      CAPTURE(n);
      CAPTURE(z.get_str());
      CHECK(s1.eval(z) == oracle::vertex_criterion(n, z, true));
      CHECK(s2.eval(z) == oracle::vertex_criterion(n, z, false));
    }
    // Breakpoints belong to the piece on the right; the sum is continuous there anyway.
    for (long i = 1; 2 * i <= n; ++i) {
      CHECK(s1.eval(q(i)) == oracle::vertex_criterion(n, q(i), true));
      CHECK(s2.eval(q(i)) == oracle::vertex_criterion(n, q(i), false));
    }
  }
}

TEST_CASE("t and z conversions") {
  CHECK(z_of_t(4, 0) == 2);
  CHECK(t_of_z(4, 0.75) == doctest::Approx(0.625));
  for (long n : {4L, 7L, 20L}) {
    for (double z : {0.1, 1.0, 1.9}) CHECK(z_of_t(n, t_of_z(n, z)) == doctest::Approx(z).epsilon(1e-14));
  }
  const double eps = 1e-9;
  CHECK(z_of_t(9, 1.5 - eps) == doctest::Approx(3 * eps).epsilon(1e-6));
  CHECK_THROWS_AS(z_of_t(4, 1.0), std::domain_error);
  CHECK_THROWS_AS(z_of_t(4, -0.1), std::domain_error);
  CHECK_THROWS_AS(t_of_z(4, 0.0), std::domain_error);
  CHECK_THROWS_AS(t_of_z(4, 2.5), std::domain_error);
}

TEST_CASE("threshold") {
  CHECK(threshold_z(4) == doctest::Approx(0.75));
  CHECK(threshold_z(5) == doctest::Approx(1.0));
  const double r = std::pow(20.0, 1.0 / 17);
  CHECK(threshold_z(20) == doctest::Approx(std::min(19.0 / 4, r / (r - 1))));
  for (long n = 50; n <= 300; ++n) {
    const double ratio = threshold_z(n) * std::log(static_cast<double>(n)) / static_cast<double>(n - 3);
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.25);
  }
}

TEST_CASE("signs below the threshold") {
  for (long n = 4; n <= 40; ++n) {
    const PiecewisePolynomial s1 = build_S1(n);
    const PiecewisePolynomial s2 = build_S2(n);
    const double thr = threshold_z(n);
    for (int k = 1; k < 25; ++k) {
      const Rational z = from_double(thr * k / 25);
      CHECK(sgn(s1.eval(z)) < 0);
      CHECK(sgn(s2.eval(z)) > 0);
    }
  }
}

TEST_CASE("decision table is total") {
  using K = ExtremalityKind;
  CHECK(decide(-1, std::nullopt, true) == K::StrictLocalMax);
  CHECK(decide(1, std::nullopt, true) == K::StrictLocalMin);
  CHECK(decide(0, std::nullopt, true) == K::Inconclusive);
  CHECK(decide(-1, 1, true) == K::StrictLocalMax);  // S2 ignored on the diagonal
  CHECK(decide(-1, -1, false) == K::StrictLocalMax);
  CHECK(decide(1, 1, false) == K::StrictLocalMin);
  CHECK(decide(1, -1, false) == K::NotExtremal);
  CHECK(decide(-1, 1, false) == K::NotExtremal);
  CHECK(decide(0, 1, false) == K::Inconclusive);
  CHECK(decide(-1, 0, false) == K::Inconclusive);
  CHECK(decide(0, 0, false) == K::Inconclusive);
  CHECK(decide(-1, std::nullopt, false) == K::Inconclusive);
  CHECK(to_string(K::NotExtremal) == "NotExtremal");
}

TEST_CASE("classify examples") {
  const Extremality a = classify({4, 4}, 0.0);
  CHECK(a.kind == ExtremalityKind::StrictLocalMax);
  CHECK(a.z == 2);
  CHECK(a.s1_sign == -1);
  CHECK_FALSE(a.s2_sign.has_value());

  const Extremality b = classify_at_z({5, 5}, q(3, 2));
  CHECK(b.kind == ExtremalityKind::StrictLocalMin);

  const Extremality c = classify_at_z({4, 10}, q(7, 4));
  CHECK(c.kind == ExtremalityKind::StrictLocalMax);
  CHECK(c.s2_sign == -1);

  const Extremality d = classify_at_z({4, 10}, q(3, 2));
  CHECK(d.kind == ExtremalityKind::NotExtremal);
  CHECK(d.s1_sign == 1);
  CHECK(d.s2_sign == -1);

  // n = 4 is a perfect square, so t = 1/4 gives z = 3/2 exactly.
  const Extremality e = classify({4, 10}, q(1, 4), default_classify_eps());
  CHECK(e.z_exact);
  CHECK(e.z == q(3, 2));
  CHECK(e.kind == ExtremalityKind::NotExtremal);
  CHECK(classify({4, 10}, q(1, 8), default_classify_eps()).kind == ExtremalityKind::StrictLocalMax);
}

TEST_CASE("zeros of the criteria are inconclusive") {
  CHECK(classify_at_z({5, 5}, q(1)).kind == ExtremalityKind::Inconclusive);
  CHECK(classify_at_z({5, 5}, q(2)).kind == ExtremalityKind::Inconclusive);
  CHECK(classify_at_z({4, 4}, q(3, 4)).kind == ExtremalityKind::Inconclusive);
  // Exactly one zero with n < d.
  CHECK(classify_at_z({4, 9}, q(4, 3)).kind == ExtremalityKind::Inconclusive);
}

TEST_CASE("irrational z: certified signs") {
  // t = 1/10 at n = 5: z = 5/2 - sqrt(5)/10, irrational.
  const Extremality e = classify({5, 7}, q(1, 10), default_classify_eps());
  CHECK_FALSE(e.z_exact);
  CHECK(e.z.get_d() == doctest::Approx(2.5 - std::sqrt(5.0) / 10));
  CHECK(e.s1_sign == sgn(build_S1(5).eval(from_double(2.5 - std::sqrt(5.0) / 10))));
  CHECK(e.s2_sign == sgn(build_S2(5).eval(from_double(2.5 - std::sqrt(5.0) / 10))));

  // Tiny but nonzero values near the corner are still decided.
  const double root = std::sqrt(20.0);
  const double t = root / 2 - 0.01 / root;
  CHECK(classify({20, 20}, t).kind == ExtremalityKind::StrictLocalMax);
}

TEST_CASE("classify is invariant under the representation of t") {
  const Rational eps = default_classify_eps();
  for (long n : {5L, 6L, 7L}) {
    const Rational t1 = parse_rational("0.35");
    const Rational t2 = parse_rational("35/100");
    const Rational t3 = parse_rational("7/20");
    const Extremality a = classify({n, n + 2}, t1, eps);
    CHECK(a.kind == classify({n, n + 2}, t2, eps).kind);
    CHECK(a.kind == classify({n, n + 2}, t3, eps).kind);
  }
}

TEST_CASE("diagonal classification is decided off the zero set") {
  for (long n = 4; n <= 14; ++n) {
    const PiecewisePolynomial s1 = build_S1(n);
    for (long k = 1; k < 101 * n / 2; k += 7) {
      const Rational z = q(k, 101);
      if (sgn(s1.eval(z)) == 0) continue;
      CHECK(classify_at_z({n, n}, z).kind != ExtremalityKind::Inconclusive);
    }
  }
}

TEST_CASE("classify input checks") {
  CHECK_THROWS_AS(classify({3, 3}, 0.0), std::domain_error);
  CHECK_THROWS_AS(classify({6, 5}, 0.0), std::domain_error);
  CHECK_THROWS_AS(classify({4, 4}, 1.0), std::domain_error);
  CHECK_THROWS_AS(classify({4, 4}, -0.5), std::domain_error);
  CHECK_THROWS_AS(classify_at_z({4, 4}, q(0)), std::domain_error);
  CHECK_THROWS_AS(classify_at_z({4, 4}, q(5, 2)), std::domain_error);
}

TEST_CASE("alternating sum condition") {
  const std::vector<Rational> ones(8, Rational(1));
  // Single term: sign (-1)^l.
  CHECK(alt_sum_sign(2, 7, q(5, 2), ones) == 1);
  CHECK(alt_sum_sign(1, 6, q(3, 2), ones) == -1);
  // n = 6, z = 1.2: bound 1/(1 - (1/6)^(1/3)) ~ 2.2, and S2 is indeed positive.
  CHECK(alt_sum_sign(0, 6, q(6, 5), ones) == 1);
  CHECK(sgn(build_S2(6).eval(q(6, 5))) > 0);
  // n = 5, z = 1.9 lies past the bound ~1.809; the condition is silent.
  CHECK_FALSE(alt_sum_sign(0, 5, q(19, 10), ones).has_value());
  CHECK_THROWS_AS(alt_sum_sign(0, 5, q(3, 2), std::vector<Rational>{q(1), q(0)}), std::domain_error);
  CHECK_THROWS_AS(alt_sum_sign(2, 5, q(3, 2), ones), std::domain_error);
}

TEST_CASE("alternating sum condition never contradicts the exact sum") {
  for (long n = 4; n <= 16; ++n) {
    const PiecewisePolynomial s2 = build_S2(n);
    for (long k = 1; k < 40 * n / 2; k += 3) {
      const Rational z = q(k, 40);
      const auto sign = alt_sum_sign(0, n, z, std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(1)));
      if (sign) CHECK(sgn(s2.eval(z)) == *sign);
    }
  }
}
