#include "cubesec/verify.hpp"

#include "cubesec/criterion.hpp"
#include "cubesec/format.hpp"
#include "cubesec/rho.hpp"
#include "cubesec/volume.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cubesec {

namespace {

// Six-digit values for d = 8..35 (rho_minus, rho_circ, rho_plus).
struct ReferenceRow {
  long d;
  double minus, circ, plus;
};
constexpr ReferenceRow kReferenceTable[] = {
    {8, 3.38859, 3.14086, 2.13730},   {9, 3.85428, 3.59394, 2.52065},   {10, 4.31894, 4.04931, 2.90984},
    {11, 4.78630, 4.50661, 3.30377},  {12, 5.25481, 4.96566, 3.70286},  {13, 5.72466, 5.42625, 4.10615},
    {14, 6.19563, 5.88821, 4.51316},  {15, 6.66760, 6.35143, 4.92352},  {16, 7.14049, 6.81577, 5.33689},
    {17, 7.61421, 7.28115, 5.75298},  {18, 8.08869, 7.74749, 6.17156},  {19, 8.56386, 8.21469, 6.59241},
    {20, 9.03967, 8.68271, 7.01536},  {21, 9.51608, 9.15149, 7.44025},  {22, 9.99303, 9.62096, 7.86693},
    {23, 10.4705, 10.0911, 8.29529},  {24, 10.9485, 10.5619, 8.72522},  {25, 11.4269, 11.0332, 9.15661},
    {26, 11.9057, 11.5051, 9.58938},  {27, 12.3849, 11.9775, 10.0234},  {28, 12.8646, 12.4504, 10.4587},
    {29, 13.3445, 12.9237, 10.8952},  {30, 13.8249, 13.3975, 11.3328},  {31, 14.3055, 13.8717, 11.7714},
    {32, 14.7864, 14.3464, 12.2110},  {33, 15.2677, 14.8214, 12.6515},  {34, 15.7492, 15.2967, 13.0930},
    {35, 16.2310, 15.7725, 13.5353},
};

constexpr std::uint64_t kSeed = 20240607;

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void add(std::string check, bool passed, std::string detail = {}) {
    out_.push_back({name_, std::move(check), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string name_;
  std::vector<CheckResult> out_;
};

std::string sci(double x) { return format_sig(x, 3); }

Direction random_direction(std::mt19937_64& rng, std::size_t active, std::size_t zeros, bool unit) {
  std::uniform_real_distribution<double> coord(0.05, 1.0);
  Direction dir;
  for (std::size_t i = 0; i < active; ++i) dir.a.push_back(coord(rng));
  dir.a.insert(dir.a.end(), zeros, 0.0);
  std::shuffle(dir.a.begin(), dir.a.end(), rng);
  if (unit) {
    const double norm = dir.norm();
    for (double& x : dir.a) x /= norm;
  }
  return dir;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// S1 (weighted) or S2 by enumerating the vertices of [0,1]^n.
Rational brute_force_criterion(long n, const Rational& z, bool weighted) {
  Rational sum(0);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const long i = std::popcount(mask);
    if (Rational(i) > z) continue;
    Rational term = pow(Rational(z - i), static_cast<unsigned long>(n - 3));
    if (weighted) term *= p_poly(i, n).eval(z);
    if (i % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

// t drawn so that z = n/2 - t sqrt(n) is uniform in (0, threshold_z(n)).
double window_t(std::mt19937_64& rng, long n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = 0;
  while (x == 0.0) x = u(rng);
  const double root = std::sqrt(static_cast<double>(n));
  const double t = root / 2 - x * threshold_z(n) / root;
  return std::min(t, std::nextafter(root / 2, 0.0));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"formulas", "criteria", "rho", "props", "all"};
  return names;
}

std::vector<CheckResult> check_formulas() {
  Suite s("formulas");
  std::mt19937_64 rng(kSeed);

  {
    const SectionQuery q{Direction::subdiagonal(2, 2), 0.0};
    const double v = vertex_sum_volume(q);
    const double w = polya_volume(q).value;
    const double err = std::max(std::fabs(v - std::sqrt(2.0)), std::fabs(w - std::sqrt(2.0)));
    s.add("square_diagonal", err < 1e-9, "max error " + sci(err));
  }
  {
    const SectionQuery q{Direction::subdiagonal(3, 3), 0.0};
    const double ref = 3 * std::sqrt(3.0) / 4;
    const double err = std::max(std::fabs(vertex_sum_volume(q) - ref), std::fabs(polya_volume(q).value - ref));
    s.add("hexagon", err < 1e-9, "max error " + sci(err));
  }
  {
    const SectionQuery q{Direction::subdiagonal(6, 6), 0.7};
    const double err = std::fabs(vertex_sum_volume(q) - polya_volume(q).value);
    s.add("diagonal6_t0.7", err < 1e-8, "|sum - integral| = " + sci(err));
  }
  {
    const QuadratureConfig cfg;
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
      const std::size_t active = uniform_index(rng, 3, 8);
      Direction dir = random_direction(rng, active, uniform_index(rng, 0, 2), false);
      std::uniform_real_distribution<double> tt(0.0, 0.95 * dir.sigma() / 2);
      double t = tt(rng);
      t = std::min(t, std::nextafter(std::sqrt(static_cast<double>(dir.dim())) / 2, 0.0));
      const SectionQuery q{dir, t};
      worst = std::max(worst, std::fabs(vertex_sum_volume(q) - polya_volume(q, cfg).value));
    }
    s.add("random_equivalence", worst < cfg.abs_tol + 1e-9, "200 directions, max |sum - integral| = " + sci(worst));
  }

  double worst1 = 0;
  double worst2 = 0;
  for (long n = 4; n <= 8; ++n) {
    for (int k = 0;; ++k) {
      const double t = 0.05 * k;
      if (t >= std::sqrt(static_cast<double>(n)) / 2) break;
      const Rational z = from_double(z_of_t(n, t));
      worst1 = std::max(worst1, std::fabs(q1_integral(n, t).value - hessian_combo_sum(n, z).value()));
      worst2 = std::max(worst2, std::fabs(q2_integral(n, t).value - hessian_outside_sum(n, z).value()));
    }
  }
  s.add("combo_sum_vs_integral", worst1 < 1e-6, "n = 4..8, t = 0.05k, max error " + sci(worst1));
  s.add("outside_sum_vs_integral", worst2 < 1e-6, "n = 4..8, t = 0.05k, max error " + sci(worst2));

  {
    bool ok = true;
    for (long n = 4; n <= 10; ++n) ok = ok && q1_integral(n, 0).value < 0 && q2_integral(n, 0).value < 0;
    s.add("integrals_negative_at_center", ok, "n = 4..10");
  }

  {
    const double h = 1e-5;
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const std::size_t active = uniform_index(rng, 4, 7);
      Direction dir = random_direction(rng, active, uniform_index(rng, 0, 1), true);
      std::uniform_real_distribution<double> tt(0.0, 0.8 * dir.sigma() / 2);
      const double t = tt(rng);
      auto g = [&](const std::vector<double>& a) {
        const Direction d{a};
        return vertex_sum_volume_b(d, d.sigma() / 2 - t) / d.norm();
      };
      std::vector<double> grad;
      std::vector<double> fd;
      for (std::size_t j = 0; j < dir.dim(); ++j) {
        grad.push_back(grad_sum({dir, t}, j + 1));
        if (dir.a[j] == 0.0) {
          fd.push_back(0.0);
          continue;
        }
        std::vector<double> ap = dir.a;
        std::vector<double> am = dir.a;
        ap[j] += h;
        am[j] -= h;
        fd.push_back((g(ap) - g(am)) / (2 * h));
      }
      double scale = 0;
      double diff = 0;
      for (std::size_t j = 0; j < grad.size(); ++j) {
        scale = std::max(scale, std::fabs(grad[j]));
        diff = std::max(diff, std::fabs(grad[j] - fd[j]));
      }
      worst = std::max(worst, diff / scale);
    }
    s.add("gradient_vs_finite_difference", worst < 1e-5, "20 points, max relative error " + sci(worst));
  }
  {
    const SectionQuery q{Direction::subdiagonal(4, 6), 0.3};
    const double g1 = grad_sum(q, 1);
    bool ok = grad_sum(q, 5) == 0.0 && grad_sum(q, 6) == 0.0;
    for (std::size_t j = 2; j <= 4; ++j) ok = ok && std::fabs(grad_sum(q, j) - g1) <= 1e-14 * std::fabs(g1);
    s.add("gradient_symmetry", ok, "equal on the active block, zero outside");
  }
  return s.take();
}

std::vector<CheckResult> check_criteria(long dmax) {
  Suite s("criteria");
  std::mt19937_64 rng(kSeed + 1);
  const Polynomial z = Polynomial::monomial(Rational(1), 1);
  auto q = [](long p, long qq) { return Polynomial::constant(make_rational(p, qq)); };
  auto c = [](long v) { return Polynomial::constant(Rational(v)); };

  struct Explicit {
    const char* name;
    bool s1;
    long n;
    std::size_t piece;
    Polynomial expected;
  };
  const Explicit pieces[] = {
      {"S1 n=4 [1,2)", true, 4, 1, Polynomial({make_rational(34, 3), Rational(-24), Rational(17), Rational(-4)})},
      {"S1 n=5 [1,2)", true, 5, 1, q(-5, 6) * (c(4) * z * z - c(10) * z + c(7)) * (z - c(1)) * (z - c(2))},
      {"S1 n=5 [2,5/2]", true, 5, 2, q(5, 2) * (c(2) * z * z - c(10) * z + c(13)) * (z - c(2)) * (z - c(3))},
      {"S1 n=6 [1,2)", true, 6, 1,
       Polynomial({make_rational(63, 5), Rational(-48), Rational(72), Rational(-54), make_rational(81, 4), Rational(-3)})},
      {"S1 n=6 [2,3]", true, 6, 2,
       Polynomial({make_rational(-2637, 5), Rational(1080), Rational(-882), Rational(360), make_rational(-147, 2),
                   Rational(6)})},
      {"S2 n=4 [1,2)", false, 4, 1, c(-3) * (z - q(4, 3))},
      {"S2 n=5 [1,2)", false, 5, 1, Polynomial({Rational(-5), Rational(10), Rational(-4)})},
      {"S2 n=5 [2,5/2]", false, 5, 2, Polynomial({Rational(35), Rational(-30), Rational(6)})},
      {"S2 n=6 [1,2)", false, 6, 1, Polynomial({Rational(6), Rational(-18), Rational(18), Rational(-5)})},
      {"S2 n=6 [2,3]", false, 6, 2, Polynomial({Rational(-114), Rational(162), Rational(-72), Rational(10)})},
      {"S2 n=7 [1,2)", false, 7, 1, Polynomial({Rational(-7), Rational(28), Rational(-42), Rational(28), Rational(-6)})},
      {"S2 n=7 [2,3)", false, 7, 2,
       Polynomial({Rational(329), Rational(-644), Rational(462), Rational(-140), Rational(15)})},
      {"S2 n=7 [3,7/2]", false, 7, 3,
       Polynomial({Rational(-2506), Rational(3136), Rational(-1428), Rational(280), Rational(-20)})},
  };
  for (const Explicit& e : pieces) {
    const PiecewisePolynomial pw = e.s1 ? build_S1(e.n) : build_S2(e.n);
    const Polynomial& got = pw.pieces().at(e.piece);
    s.add(std::string("piece ") + e.name, got == e.expected, got == e.expected ? "" : "got " + got.to_string());
  }

  {
    bool ok = true;
    for (long n = 4; n <= 10; ++n) {
      const PiecewisePolynomial s1 = build_S1(n);
      const PiecewisePolynomial s2 = build_S2(n);
      for (long k = 1; k <= 7 * n / 2; ++k) {
        const Rational zz = make_rational(k, 7);
        ok = ok && s1.eval(zz) == brute_force_criterion(n, zz, true) && s2.eval(zz) == brute_force_criterion(n, zz, false);
      }
    }
    s.add("vertex_enumeration_oracle", ok, "n = 4..10, z = k/7");
  }

  {
    const SubdiagonalSpec d4{4, 4};
    const SubdiagonalSpec d5{5, 5};
    const SubdiagonalSpec s410{4, 10};
    const bool ok = classify(d4, 0.0).kind == ExtremalityKind::StrictLocalMax &&
                    classify_at_z(d5, make_rational(3, 2)).kind == ExtremalityKind::StrictLocalMin &&
                    classify_at_z(s410, make_rational(7, 4)).kind == ExtremalityKind::StrictLocalMax &&
                    classify_at_z(s410, make_rational(3, 2)).kind == ExtremalityKind::NotExtremal &&
                    classify(s410, 0.25).kind == ExtremalityKind::NotExtremal;
    s.add("classify_examples", ok);
  }

  {
    bool ok = true;
    for (long n = 4; n <= 40; ++n) {
      const PiecewisePolynomial s1 = build_S1(n);
      const PiecewisePolynomial s2 = build_S2(n);
      const double thr = threshold_z(n);
      for (int k = 1; k <= 20; ++k) {
        const Rational zz = from_double(thr * k / 21);
        ok = ok && sgn(s1.eval(zz)) < 0 && sgn(s2.eval(zz)) > 0;
      }
    }
    s.add("signs_below_threshold", ok, "n = 4..40, 20 points each");
  }

  {
    int bad = 0;
    int total = 0;
    for (long n = 4; n <= std::min<long>(20, dmax); ++n) {
      for (int k = 0; k < 50; ++k, ++total) {
        bad += classify({n, n}, window_t(rng, n)).kind != ExtremalityKind::StrictLocalMax;
      }
    }
    s.add("diagonal_window_max", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " StrictLocalMax");
  }
  {
    int bad = 0;
    int total = 0;
    for (long d = 5; d <= std::min<long>(25, dmax); ++d) {
      for (long n = 4; n < d; ++n) {
        for (int k = 0; k < 5; ++k, ++total) {
          bad += classify({n, d}, window_t(rng, n)).kind != ExtremalityKind::NotExtremal;
        }
      }
    }
    s.add("subdiagonal_window_not_extremal", bad == 0,
          std::to_string(total - bad) + "/" + std::to_string(total) + " NotExtremal");
  }

  {
    bool ok = true;
    for (long n = 4; n <= 12; ++n) {
      const PiecewisePolynomial s1 = build_S1(n);
      for (long k = 1; k < 997 * n / 2; k += 37) {
        const Rational zz = make_rational(k, 997);
        if (sgn(s1.eval(zz)) == 0) continue;
        ok = ok && classify_at_z({n, n}, zz).kind != ExtremalityKind::Inconclusive;
      }
    }
    s.add("diagonal_decided_off_zeros", ok);
  }

  {
    bool ok = true;
    for (int s1 = -1; s1 <= 1; ++s1) {
      ok = ok && decide(s1, std::nullopt, true) ==
                     (s1 < 0 ? ExtremalityKind::StrictLocalMax
                             : (s1 > 0 ? ExtremalityKind::StrictLocalMin : ExtremalityKind::Inconclusive));
      for (int s2 = -1; s2 <= 1; ++s2) {
        ExtremalityKind want = ExtremalityKind::Inconclusive;
        if (s1 < 0 && s2 < 0) want = ExtremalityKind::StrictLocalMax;
        if (s1 > 0 && s2 > 0) want = ExtremalityKind::StrictLocalMin;
        if (s1 * s2 < 0) want = ExtremalityKind::NotExtremal;
        ok = ok && decide(s1, s2, false) == want;
      }
    }
    s.add("decision_table", ok);
  }

  {
    const std::vector<Rational> ones(4, Rational(1));
    const bool ok = alt_sum_sign(1, 6, make_rational(3, 2), ones) == -1 &&
                    alt_sum_sign(0, 6, make_rational(6, 5), ones) == 1 &&
                    !alt_sum_sign(0, 5, make_rational(19, 10), ones).has_value();
    s.add("alternating_sum_condition", ok);
  }

  {
    double lo = 1e9;
    double hi = 0;
    for (long n = 50; n <= 300; ++n) {
      const double r = threshold_z(n) * std::log(static_cast<double>(n)) / static_cast<double>(n - 3);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    s.add("threshold_asymptotic", lo >= 0.8 && hi <= 1.25, "ratio in [" + format_sig(lo, 4) + ", " + format_sig(hi, 4) + "]");
  }
  return s.take();
}

std::vector<CheckResult> check_rho(long dmax) {
  Suite s("rho");
  if (dmax >= 8) {
    const long top = std::min<long>(35, dmax);
    const std::vector<TableRow> rows = table(8, top);
    int matched = 0;
    int total = 0;
    std::string first_miss;
    for (const TableRow& r : rows) {
      const ReferenceRow& ref = kReferenceTable[r.d - 8];
      const double got[] = {r.rho_minus, r.rho_circ, r.rho_plus};
      const double want[] = {ref.minus, ref.circ, ref.plus};
      for (int i = 0; i < 3; ++i, ++total) {
        const bool ok = !r.error && matches_sig(got[i], want[i]);
        matched += ok;
        if (!ok && first_miss.empty()) first_miss = "; first mismatch at d = " + std::to_string(r.d);
      }
    }
    s.add("reference_table", matched == total,
          std::to_string(matched) + "/" + std::to_string(total) + " values, d = 8.." + std::to_string(top) + first_miss);
  }

  for (const ClosedFormCheck& c : closed_form_checks()) {
    s.add("closed_form " + c.name, c.passed,
          c.exact_check ? "exact " + c.expected : "error " + sci(c.abs_error));
  }

  {
    const std::vector<TableRow> rows = table(4, dmax);
    long bad = 0;
    std::string first;
    for (const TableRow& r : rows) {
      if (r.error || !r.pattern_ok) {
        ++bad;
        if (first.empty()) first = "; first failure at n = " + std::to_string(r.d);
      }
    }
    s.add("sign_patterns", bad == 0, "n = 4.." + std::to_string(dmax) + ", " + std::to_string(bad) + " violations" + first);
  }

  {
    // Values quoted to the digits printed in the literature for small n.
    struct Quoted {
      long n;
      int which;  // 0 minus, 1 circ, 2 plus
      double value;
      int digits;
    };
    const Quoted quoted[] = {{4, 0, 1.71229, 6}, {6, 2, 1.39766, 6}, {6, 0, 2.46963, 6}, {7, 2, 1.77221, 6},
                             {7, 0, 2.9324, 5},  {6, 1, 2.2407, 5},  {7, 1, 2.69068, 6}, {5, 1, 1.80902, 6}};
    bool ok = true;
    for (const Quoted& qd : quoted) {
      const RhoTriple r = solve_rho(qd.n);
      const double got = qd.which == 0 ? r.rho_minus.approx() : (qd.which == 1 ? r.rho_circ.approx() : r.rho_plus.approx());
      ok = ok && matches_sig(got, qd.value, qd.digits);
    }
    s.add("small_n_values", ok, "n = 4..7");
  }
  return s.take();
}

std::vector<CheckResult> check_props() {
  Suite s("props");
  std::mt19937_64 rng(kSeed + 2);

  {
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      const Direction dir = random_direction(rng, uniform_index(rng, 2, 8), uniform_index(rng, 0, 1), true);
      const double bound = std::sqrt(static_cast<double>(dir.dim())) / 2;
      double prev = vertex_sum_volume({dir, 0.0});
      for (int i = 1; i < 100; ++i) {
        const double v = vertex_sum_volume({dir, bound * i / 100});
        ok = ok && v <= prev + 1e-10;
        prev = v;
      }
    }
    s.add("brunn_monotone", ok, "20 unit directions, 100-point grid");
  }
  {
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const Direction dir = random_direction(rng, uniform_index(rng, 2, 8), uniform_index(rng, 0, 1), true);
      worst = std::max(worst, std::fabs(fubini_integral(dir) - 1));
    }
    s.add("fubini_normalization", worst < 1e-6, "max |integral - 1| = " + sci(worst));
  }
  {
    bool ok = true;
    for (int k = 0; k < 50; ++k) {
      const Direction dir = random_direction(rng, uniform_index(rng, 2, 8), uniform_index(rng, 0, 2), true);
      // t / c stays below sqrt(d)/2 for c = 1/2.
      std::uniform_real_distribution<double> tt(0.0, std::min(dir.sigma(), 0.99 * std::sqrt(double(dir.dim()))) / 4);
      const double t = tt(rng);
      for (double c : {0.5, 2.0, 4.0}) {
        Direction scaled = dir;
        for (double& x : scaled.a) x *= c;
        ok = ok && vertex_sum_volume({scaled, t}, SumMode::Exact) == vertex_sum_volume({dir, t / c}, SumMode::Exact);
      }
    }
    s.add("scaling_covariance", ok, "exact equality, c in {1/2, 2, 4}");
  }
  {
    bool ok = true;
    for (int k = 0; k < 50; ++k) {
      const Direction dir = random_direction(rng, uniform_index(rng, 2, 8), uniform_index(rng, 0, 2), false);
      std::uniform_real_distribution<double> tt(0.0, std::min(dir.sigma(), 0.99 * std::sqrt(double(dir.dim()))) / 2);
      const double t = tt(rng);
      Direction perm = dir;
      std::shuffle(perm.a.begin(), perm.a.end(), rng);
      ok = ok && vertex_sum_volume({dir, t}, SumMode::Exact) == vertex_sum_volume({perm, t}, SumMode::Exact);
    }
    s.add("permutation_invariance", ok, "exact equality");
  }
  {
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      const Direction dir = random_direction(rng, uniform_index(rng, 2, 8), 0, false);
      std::uniform_real_distribution<double> bb(0.0, dir.sigma());
      const double b = bb(rng);
      worst = std::max(worst, std::fabs(vertex_sum_volume_b(dir, b) - vertex_sum_volume_b(dir, dir.sigma() - b)));
    }
    s.add("reflection_symmetry", worst < 1e-10, "max difference " + sci(worst));
  }
  {
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
      const Direction dir = random_direction(rng, uniform_index(rng, 2, 10), uniform_index(rng, 0, 2), true);
      worst = std::max(worst, vertex_sum_volume({dir, 0.0}));
    }
    s.add("ball_bound", worst <= std::sqrt(2.0) + 1e-9, "1000 unit directions, max V(a, 0) = " + format_sig(worst, 10));
  }
  {
    double worst = -1e300;
    for (int k = 1; k <= 10000; ++k) worst = std::max(worst, sinc_bracket(0.01 * k));
    s.add("bracket_negative", worst < 0, "s in (0, 100], max " + sci(worst));
  }
  {
    bool ok = true;
    for (long n = 5; n <= 8; ++n) {
      const double start = n == 5 ? 4.0 : 0.0;
      double prev = 0;
      for (int k = 1; k <= 1000; ++k) {
        const double sv = start + 0.05 * k;
        const double v = sinc_bracket_scaled(n, sv);
        ok = ok && sinc_bracket_slope_numerator(n, sv) > 0 && (k == 1 || v > prev);
        prev = v;
      }
    }
    s.add("scaled_bracket_increasing", ok, "n = 6, 7, 8 on (0, 50], n = 5 on (4, 54]");
  }
  {
    const double v = quintic_sinc_integral();
    s.add("quintic_integral_negative", v < -1e-8, "value " + format_sig(v, 10));
  }
  return s.take();
}

std::vector<CheckResult> run_suite(const std::string& suite, long dmax) {
  if (suite == "formulas") return check_formulas();
  if (suite == "criteria") return check_criteria(dmax);
  if (suite == "rho") return check_rho(dmax);
  if (suite == "props") return check_props();
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (auto part : {check_formulas(), check_criteria(dmax), check_rho(dmax), check_props()}) {
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite + "' (expected formulas, criteria, rho, props or all)");
}

}  // namespace cubesec
