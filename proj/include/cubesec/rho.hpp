#pragma once

// Critical roots of the criteria: rho_plus < rho_circ < rho_minus, where S1
// changes sign at rho_plus (- to +) and rho_minus (+ to -), and S2 changes
// sign at rho_circ (+ to -).

#include "cubesec/criterion.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubesec {

struct CertifiedRoot {
  /// Refined isolating interval (lo == hi when the root is exact).
  IsolatingInterval interval;
  /// The exact root when `exact`, otherwise the midpoint of `interval`.
  Rational value;
  bool exact = false;

  double approx() const { return value.get_d(); }
};

struct RhoTriple {
  long n = 0;
  CertifiedRoot rho_minus;
  CertifiedRoot rho_circ;
  CertifiedRoot rho_plus;
  bool pattern_ok = false;
};

class PatternViolation : public std::runtime_error {
 public:
  PatternViolation(long n, std::vector<SignSegment> s1, std::vector<SignSegment> s2);
  long n() const { return n_; }
  const std::vector<SignSegment>& s1_pattern() const { return s1_; }
  const std::vector<SignSegment>& s2_pattern() const { return s2_; }

 private:
  long n_;
  std::vector<SignSegment> s1_;
  std::vector<SignSegment> s2_;
};

/// 10^-8: enough for six printed significant digits.
Rational default_table_eps();
/// 10^-12
Rational default_closed_form_eps();

/// Isolates and refines the zeros of S1 and S2 on (0, n/2]. Throws
/// PatternViolation when the sign patterns are not [-, +, -] and [+, -].
RhoTriple solve_rho(long n, const Rational& eps = default_table_eps(), RootMethod method = RootMethod::Descartes);

struct TableRow {
  long d = 0;
  double rho_minus = 0;
  double rho_circ = 0;
  double rho_plus = 0;
  bool minus_exact = false;
  bool circ_exact = false;
  bool plus_exact = false;
  bool pattern_ok = false;
  /// Set when the row failed; the other rows are still computed.
  std::optional<std::string> error;
};

TableRow to_row(const RhoTriple& triple);

/// Worker count: CUBE_SECTIONS_THREADS when set to a positive integer,
/// otherwise the hardware concurrency.
unsigned thread_cap();

/// One row per d in [d_min, d_max], computed in parallel, returned in order of d.
std::vector<TableRow> table(long d_min, long d_max, const Rational& eps = default_table_eps(),
                            unsigned threads = 0);

struct ClosedFormCheck {
  std::string name;
  std::string expected;
  double expected_value = 0;
  double computed_value = 0;
  double abs_error = 0;
  /// Exact checks compare rationals; the rest compare to the tolerance.
  bool exact_check = false;
  bool passed = false;
};

double rho4_minus_closed_form();
double rho5_circ_closed_form();
double rho6_circ_closed_form();

std::vector<ClosedFormCheck> closed_form_checks(double tol = 1e-12);

}  // namespace cubesec
