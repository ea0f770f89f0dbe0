// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [max_n_for_pattern_check]  (default 100)

#include "cubesec/criterion.hpp"
#include "cubesec/format.hpp"
#include "cubesec/rho.hpp"
#include "cubesec/verify.hpp"
#include "cubesec/volume.hpp"

#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

using namespace cubesec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int k, bool ok, const std::string& detail) {
  std::printf("Criterion %d: %s  %s\n", k, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Polynomial poly(std::initializer_list<const char*> ascending) { return Polynomial(oracle::coeffs(ascending)); }

void criterion_table() {
  const auto start = Clock::now();
  const std::vector<TableRow> rows = table(8, 35);
  const double elapsed = seconds_since(start);
  bool ok = rows.size() == std::size(oracle::kPublishedTable);
  double worst = 0;
  for (std::size_t i = 0; ok && i < rows.size(); ++i) {
    const auto& ref = oracle::kPublishedTable[i];
    const TableRow& r = rows[i];
    ok = ok && !r.error && r.d == ref.d && r.pattern_ok;
    for (auto [x, y] : {std::pair{r.rho_minus, ref.minus}, {r.rho_circ, ref.circ}, {r.rho_plus, ref.plus}}) {
      worst = std::max(worst, std::fabs(x - y) / y);
      ok = ok && matches_sig(x, y);
    }
  }
  ok = ok && elapsed < 60;
  report(1, ok, "84 values, max relative deviation " + sci(worst) + " (tol 5e-6), " + format_fixed(elapsed, 2) +
                    " s (limit 60 s)");
}

void criterion_closed_forms() {
  const Rational eps = default_closed_form_eps();
  const RhoTriple r4 = solve_rho(4, eps);
  const RhoTriple r5 = solve_rho(5, eps);
  const RhoTriple r6 = solve_rho(6, eps);
  bool ok = r4.rho_plus.exact && r4.rho_plus.value == make_rational(3, 4) && r4.rho_circ.exact &&
            r4.rho_circ.value == make_rational(4, 3) && r5.rho_plus.exact && r5.rho_plus.value == 1 &&
            r5.rho_minus.exact && r5.rho_minus.value == 2;
  // Independent evaluations of the closed forms.
  const double s2 = std::sqrt(2.0);
  const double rho4 = (17 + std::cbrt(17 - 12 * s2) + std::cbrt(17 + 12 * s2)) / 12;
  const double rho5 = (5 + std::sqrt(5.0)) / 4;
  const double th = std::atan(5 * std::sqrt(11.0) / 7) / 3;
  const double rho6 = 2.4 - 0.6 * std::cos(th) + 0.6 * std::sqrt(3.0) * std::sin(th);
  const double e4 = std::fabs(r4.rho_minus.approx() - rho4);
  const double e5 = std::fabs(r5.rho_circ.approx() - rho5);
  const double e6 = std::fabs(r6.rho_circ.approx() - rho6);
  ok = ok && e4 < 1e-12 && e5 < 1e-12 && e6 < 1e-12;
  report(2, ok, "4 exact roots; irrational errors " + sci(e4) + ", " + sci(e5) + ", " + sci(e6) + " (tol 1e-12)");
}

void criterion_pieces() {
  struct Printed {
    long n;
    bool s1;
    std::size_t k;
    Polynomial p;
  };
  const Polynomial z = Polynomial::monomial(Rational(1), 1);
  auto c = [](long num, long den = 1) { return Polynomial::constant(oracle::frac(num, den)); };
  const std::vector<Printed> printed = {
      {4, true, 0, c(4, 3) * z * z * (z - c(3, 4))},
      {4, true, 1, poly({"34/3", "-24", "17", "-4"})},
      {5, true, 1, c(-5, 6) * poly({"7", "-10", "4"}) * (z - c(1)) * (z - c(2))},
      {5, true, 2, c(5, 2) * poly({"13", "-10", "2"}) * (z - c(2)) * (z - c(3))},
      {6, true, 1, poly({"63/5", "-48", "72", "-54", "81/4", "-3"})},
      {6, true, 2, poly({"-2637/5", "1080", "-882", "360", "-147/2", "6"})},
      {5, false, 1, poly({"-5", "10", "-4"})},
      {5, false, 2, poly({"35", "-30", "6"})},
      {6, false, 1, poly({"6", "-18", "18", "-5"})},
      {6, false, 2, poly({"-114", "162", "-72", "10"})},
      {7, false, 1, poly({"-7", "28", "-42", "28", "-6"})},
      {7, false, 2, poly({"329", "-644", "462", "-140", "15"})},
      {7, false, 3, poly({"-2506", "3136", "-1428", "280", "-20"})},
  };
  bool ok = true;
  for (const Printed& p : printed) {
    const PiecewisePolynomial pw = p.s1 ? build_S1(p.n) : build_S2(p.n);
    ok = ok && pw.pieces()[p.k] == p.p;
  }
  // Every piece for n = 4..7 against the brute-force vertex sum at a few rationals.
  std::size_t pieces = 0;
  for (const auto& f : oracle::frozen_pieces()) {
    const PiecewisePolynomial pw = f.s1 ? build_S1(f.n) : build_S2(f.n);
    ok = ok && pw.pieces()[f.k] == Polynomial(f.c);
    for (long j = 1; j <= 3; ++j) {
      const Rational x = Rational(static_cast<long>(f.k)) + oracle::frac(j, 4);
      if (x > oracle::frac(f.n, 2)) continue;
      ok = ok && pw.pieces()[f.k].eval(x) == oracle::vertex_criterion(f.n, x, f.s1);
    }
    ++pieces;
  }
  report(3, ok, std::to_string(printed.size()) + " printed polynomials and " + std::to_string(pieces) +
                    " oracle pieces, exact equality");
}

void criterion_formulas() {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> coord(0.05, 1.0);
  std::uniform_int_distribution<int> act(3, 8);
  std::uniform_int_distribution<int> extra(0, 2);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    Direction dir;
    const int a = act(rng);
    for (int i = 0; i < a; ++i) dir.a.push_back(coord(rng));
    dir.a.insert(dir.a.end(), extra(rng), 0.0);
    std::shuffle(dir.a.begin(), dir.a.end(), rng);
    const double norm = dir.norm();
    for (double& x : dir.a) x /= norm;
    const double cap = std::min(dir.sigma(), std::sqrt(double(dir.dim()))) / 2;
    const double t = std::uniform_real_distribution<double>(0.0, 0.95 * cap)(rng);
    const SectionQuery q{dir, t};
    worst = std::max(worst, std::fabs(vertex_sum_volume(q) - polya_volume(q).value));
  }
  const double e2 = std::fabs(vertex_sum_volume({Direction::subdiagonal(2, 2), 0.0}) - std::sqrt(2.0));
  const double e3 = std::fabs(vertex_sum_volume({Direction::subdiagonal(3, 3), 0.0}) - 3 * std::sqrt(3.0) / 4);
  const double p2 = std::fabs(polya_volume({Direction::subdiagonal(2, 2), 0.0}).value - std::sqrt(2.0));
  const double p3 = std::fabs(polya_volume({Direction::subdiagonal(3, 3), 0.0}).value - 3 * std::sqrt(3.0) / 4);
  const double known = std::max({e2, e3, p2, p3});
  report(4, worst < 1e-6 && known < 1e-9,
         "200 random sections, max |sum - integral| " + sci(worst) + " (tol 1e-6); known values " + sci(known) +
             " (tol 1e-9)");
}

void criterion_derivatives() {
  double worst = 0;
  int points = 0;
  for (long n = 4; n <= 8; ++n) {
    const double bound = std::sqrt(double(n)) / 2;
    for (int k = 0; 0.05 * k < bound - 1e-9; ++k) {
      const double t = 0.05 * k;
      const Rational z = from_double(z_of_t(n, t));
      worst = std::max(worst, std::fabs(q1_integral(n, t).value - hessian_combo_sum(n, z).value()));
      worst = std::max(worst, std::fabs(q2_integral(n, t).value - hessian_outside_sum(n, z).value()));
      ++points;
    }
  }

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(0.2, 1.0);
  const double h = 1e-5;
  double grad_err = 0;
  for (int k = 0; k < 20; ++k) {
    Direction dir;
    const int active = 4 + k % 4;
    for (int i = 0; i < active; ++i) dir.a.push_back(coord(rng));
    const double norm = dir.norm();
    for (double& x : dir.a) x /= norm;
    const double t = std::uniform_real_distribution<double>(0.0, 0.4 * dir.sigma())(rng);
    auto g = [&](const std::vector<double>& a) {
      const Direction d{a};
      return vertex_sum_volume_b(d, d.sigma() / 2 - t) / d.norm();
    };
    double scale = 0;
    double diff = 0;
    for (std::size_t j = 0; j < dir.dim(); ++j) {
      std::vector<double> ap = dir.a;
      std::vector<double> am = dir.a;
      ap[j] += h;
      am[j] -= h;
      const double fd = (g(ap) - g(am)) / (2 * h);
      const double an = grad_sum({dir, t}, j + 1);
      scale = std::max(scale, std::fabs(an));
      diff = std::max(diff, std::fabs(an - fd));
    }
    grad_err = std::max(grad_err, diff / scale);
  }
  report(5, worst < 1e-6 && grad_err < 1e-5,
         std::to_string(points) + " grid points, max Hessian deviation " + sci(worst) +
             " (tol 1e-6); gradient relative error " + sci(grad_err) + " (tol 1e-5)");
}

void criterion_windows() {
  std::mt19937_64 rng(11);
  int checked = 0;
  int wrong = 0;
  for (long n = 4; n <= 20; ++n) {
    std::uniform_real_distribution<double> zz(0.0, threshold_z(n));
    for (int k = 0; k < 50; ++k) {
      double z = 0;
      while (z <= 0) z = zz(rng);
      const Extremality e = classify({n, n}, t_of_z(n, z));
      wrong += e.kind != ExtremalityKind::StrictLocalMax;
      ++checked;
    }
  }
  for (long d = 5; d <= 25; ++d) {
    for (long n = 4; n < d; ++n) {
      std::uniform_real_distribution<double> zz(0.0, threshold_z(n));
      for (int k = 0; k < 5; ++k) {
        double z = 0;
        while (z <= 0) z = zz(rng);
        const Extremality e = classify({n, d}, t_of_z(n, z));
        wrong += e.kind != ExtremalityKind::NotExtremal;
        ++checked;
      }
    }
  }
  report(6, wrong == 0, std::to_string(checked) + " classifications, " + std::to_string(wrong) + " outside the expected kind");
}

void criterion_patterns(long nmax) {
  const auto start = Clock::now();
  long bad = 0;
  std::string first_bad;
  const std::vector<TableRow> rows = table(4, nmax);
  for (const TableRow& r : rows) {
    if (r.error || !r.pattern_ok) {
      if (!bad) first_bad = ", first at n = " + std::to_string(r.d);
      ++bad;
    }
  }
  const double elapsed = seconds_since(start);
  report(7, bad == 0 && elapsed < 600,
         "n = 4.." + std::to_string(nmax) + ", " + std::to_string(bad) + " violations" + first_bad + ", " +
             format_fixed(elapsed, 1) + " s (limit 600 s)");
}

void criterion_properties() {
  const std::vector<CheckResult> checks = check_props();
  std::size_t failed = 0;
  std::string names;
  for (const CheckResult& c : checks) {
    if (!c.passed) {
      ++failed;
      names += " " + c.name;
    }
  }
  double lo = 1e300;
  double hi = -1e300;
  for (long n = 50; n <= 300; ++n) {
    const double ratio = threshold_z(n) * std::log(double(n)) / double(n - 3);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  const bool asymptotic = lo >= 0.8 && hi <= 1.25;
  report(8, failed == 0 && asymptotic,
         std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " property checks" +
             (failed ? " (failed:" + names + ")" : std::string()) + "; threshold ratio in [" + format_sig(lo, 4) +
             ", " + format_sig(hi, 4) + "] (want [0.8, 1.25])");
}

template <class F>
void guarded(int k, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(k, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  long nmax = 100;
  if (argc > 1) nmax = std::max(4L, std::strtol(argv[1], nullptr, 10));
  guarded(1, criterion_table);
  guarded(2, criterion_closed_forms);
  guarded(3, criterion_pieces);
  guarded(4, criterion_formulas);
  guarded(5, criterion_derivatives);
  guarded(6, criterion_windows);
  guarded(7, [&] { criterion_patterns(nmax); });
  guarded(8, criterion_properties);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
