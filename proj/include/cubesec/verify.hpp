#pragma once

// Self-check suites run by `cube_sections verify`.

#include <string>
#include <vector>

namespace cubesec {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// formulas: vertex sum against the integral, derivative identities.
std::vector<CheckResult> check_formulas();
/// criteria: piece polynomials, decision table, extremality windows up to dmax.
std::vector<CheckResult> check_criteria(long dmax);
/// rho: the reference table, closed forms and sign patterns up to dmax.
std::vector<CheckResult> check_rho(long dmax);
/// props: geometric properties of V and the scalar inequalities.
std::vector<CheckResult> check_props();

/// One named suite or "all". Throws std::invalid_argument on an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, long dmax);

}  // namespace cubesec
