#include "cubesec/rho.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace cubesec {

PatternViolation::PatternViolation(long n, std::vector<SignSegment> s1, std::vector<SignSegment> s2)
    : std::runtime_error("pattern_violation at n = " + std::to_string(n) + ": S1 " + describe(s1) + "; S2 " +
                         describe(s2)),
      n_(n),
      s1_(std::move(s1)),
      s2_(std::move(s2)) {}

Rational default_table_eps() { return pow10(-8); }

Rational default_closed_form_eps() { return pow10(-12); }

namespace {

CertifiedRoot certify(const IsolatingInterval& iv, const Rational& eps) {
  CertifiedRoot r;
  r.interval = refine(iv, eps);
  if (std::optional<Rational> x = snap_exact(r.interval)) {
    r.interval.lo = *x;
    r.interval.hi = *x;
  }
  r.exact = r.interval.exact();
  r.value = (r.interval.lo + r.interval.hi) / 2;
  return r;
}

// Root strictly below x; open enclosures may end at x.
bool below(const IsolatingInterval& iv, const Rational& x) { return iv.exact() ? iv.lo < x : iv.hi <= x; }

// Decides a < b for two distinct certified roots, refining until the enclosures separate.
bool certified_less(CertifiedRoot& a, CertifiedRoot& b) {
  for (int i = 0; i < 400; ++i) {
    const IsolatingInterval& x = a.interval;
    const IsolatingInterval& y = b.interval;
    if (x.hi < y.lo || (x.hi == y.lo && !(x.exact() && y.exact()))) return true;
    if (y.hi < x.lo || (y.hi == x.lo && !(x.exact() && y.exact()))) return false;
    if (x.exact() && y.exact()) return false;
    if (!x.exact()) a = certify(x, Rational(x.width() / 2));
    if (!y.exact()) b = certify(y, Rational(y.width() / 2));
  }
  return false;
}

}  // namespace

RhoTriple solve_rho(long n, const Rational& eps, RootMethod method) {
  if (n < 4) throw std::domain_error("solve_rho: n must be >= 4 (got " + std::to_string(n) + ")");
  if (sgn(eps) <= 0) throw std::domain_error("solve_rho: eps must be positive");
  const PiecewisePolynomial s1 = build_S1(n);
  const PiecewisePolynomial s2 = build_S2(n);
  std::vector<SignSegment> p1 = sign_pattern(s1, method);
  std::vector<SignSegment> p2 = sign_pattern(s2, method);
  std::vector<IsolatingInterval> z1 = zeros(s1, method);
  std::vector<IsolatingInterval> z2 = zeros(s2, method);

  const Rational half = make_rational(n, 2);
  const bool counts_ok = nonzero_signs(p1) == std::vector<int>{-1, 1, -1} &&
                         nonzero_signs(p2) == std::vector<int>{1, -1} && z1.size() == 2 && z2.size() == 1 &&
                         below(z1.back(), half) && below(z2.back(), half);
  if (!counts_ok) throw PatternViolation(n, std::move(p1), std::move(p2));

  RhoTriple t;
  t.n = n;
  t.rho_plus = certify(z1[0], eps);
  t.rho_minus = certify(z1[1], eps);
  t.rho_circ = certify(z2[0], eps);
  t.pattern_ok = certified_less(t.rho_plus, t.rho_circ) && certified_less(t.rho_circ, t.rho_minus);
  return t;
}

TableRow to_row(const RhoTriple& triple) {
  TableRow r;
  r.d = triple.n;
  r.rho_minus = triple.rho_minus.approx();
  r.rho_circ = triple.rho_circ.approx();
  r.rho_plus = triple.rho_plus.approx();
  r.minus_exact = triple.rho_minus.exact;
  r.circ_exact = triple.rho_circ.exact;
  r.plus_exact = triple.rho_plus.exact;
  r.pattern_ok = triple.pattern_ok;
  if (!triple.pattern_ok) r.error = "roots out of order";
  return r;
}

unsigned thread_cap() {
  if (const char* env = std::getenv("CUBE_SECTIONS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<TableRow> table(long d_min, long d_max, const Rational& eps, unsigned threads) {
  if (d_min < 4 || d_max < d_min) {
    throw std::domain_error("table: need 4 <= dmin <= dmax (got " + std::to_string(d_min) + ", " +
                            std::to_string(d_max) + ")");
  }
  const std::size_t count = static_cast<std::size_t>(d_max - d_min + 1);
  std::vector<TableRow> rows(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const long d = d_min + static_cast<long>(i);
      try {
        rows[i] = to_row(solve_rho(d, eps));
      } catch (const std::exception& e) {
        rows[i].d = d;
        rows[i].error = e.what();
      }
    }
  };
  unsigned workers = threads == 0 ? thread_cap() : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    worker();
    return rows;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return rows;
}

double rho4_minus_closed_form() {
  const double r2 = std::sqrt(2.0);
  return (17 + std::cbrt(17 - 12 * r2) + std::cbrt(17 + 12 * r2)) / 12;
}

double rho5_circ_closed_form() { return (5 + std::sqrt(5.0)) / 4; }

double rho6_circ_closed_form() {
  const double theta = std::atan(5 * std::sqrt(11.0) / 7) / 3;
  return 12.0 / 5 - 0.6 * std::cos(theta) + 0.6 * std::sqrt(3.0) * std::sin(theta);
}

namespace {

ClosedFormCheck exact_check(const std::string& name, const CertifiedRoot& root, const Rational& expected) {
  ClosedFormCheck c;
  c.name = name;
  c.expected = expected.get_str();
  c.expected_value = expected.get_d();
  c.computed_value = root.approx();
  c.abs_error = std::fabs(c.computed_value - c.expected_value);
  c.exact_check = true;
  c.passed = root.exact && root.value == expected;
  return c;
}

ClosedFormCheck numeric_check(const std::string& name, const std::string& expr, const CertifiedRoot& root,
                              double expected, double tol) {
  ClosedFormCheck c;
  c.name = name;
  c.expected = expr;
  c.expected_value = expected;
  c.computed_value = root.approx();
  c.abs_error = std::fabs(c.computed_value - expected);
  c.passed = c.abs_error <= tol;
  return c;
}

}  // namespace

std::vector<ClosedFormCheck> closed_form_checks(double tol) {
  const Rational eps = default_closed_form_eps();
  const RhoTriple r4 = solve_rho(4, eps);
  const RhoTriple r5 = solve_rho(5, eps);
  const RhoTriple r6 = solve_rho(6, eps);
  std::vector<ClosedFormCheck> out;
  out.push_back(exact_check("rho4_plus", r4.rho_plus, make_rational(3, 4)));
  out.push_back(exact_check("rho4_circ", r4.rho_circ, make_rational(4, 3)));
  out.push_back(exact_check("rho5_plus", r5.rho_plus, Rational(1)));
  out.push_back(exact_check("rho5_minus", r5.rho_minus, Rational(2)));
  out.push_back(numeric_check("rho4_minus", "(17 + cbrt(17 - 12 sqrt 2) + cbrt(17 + 12 sqrt 2)) / 12", r4.rho_minus,
                              rho4_minus_closed_form(), tol));
  out.push_back(numeric_check("rho5_circ", "(5 + sqrt 5) / 4", r5.rho_circ, rho5_circ_closed_form(), tol));
  out.push_back(numeric_check("rho6_circ", "12/5 - (3/5) cos(th) + (3 sqrt 3 / 5) sin(th), th = atan(5 sqrt 11 / 7) / 3",
                              r6.rho_circ, rho6_circ_closed_form(), tol));
  return out;
}

}  // namespace cubesec
