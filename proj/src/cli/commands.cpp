#include "cubesec/commands.hpp"

#include "cubesec/criterion.hpp"
#include "cubesec/format.hpp"
#include "cubesec/rho.hpp"
#include "cubesec/verify.hpp"
#include "cubesec/volume.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cubesec {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "pretty") return Format::Pretty;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + name + "' (expected pretty, csv or json)");
}

namespace {

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

// Fallback CSV: one header row and one value row of the scalar results.
std::string scalar_csv(const json& results) {
  std::string header;
  std::string values;
  for (const auto& [key, value] : results.items()) {
    if (value.is_structured()) continue;
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += key;
    if (value.is_string()) {
      values += value.get<std::string>();
    } else if (value.is_number_float()) {
      values += format_shortest(value.get<double>());
    } else {
      values += value.dump();
    }
  }
  return header + "\n" + values + "\n";
}

Rational parse_number(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string sign_char(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

json sign_json(std::optional<int> s) { return s ? json(*s) : json(nullptr); }

std::string exact_or_decimal(const Rational& x, bool exact) {
  return exact ? to_string(x) : format_sig(x.get_d(), 17);
}

}  // namespace

std::string render(const CommandResult& result, Format format) {
  switch (format) {
    case Format::Json:
      return with_newline(result.record.dump(2));
    case Format::Csv:
      return with_newline(result.csv.empty() ? scalar_csv(result.record.results) : result.csv);
    case Format::Pretty:
      break;
  }
  std::string out = with_newline(result.pretty);
  for (const std::string& w : result.record.warnings) out += "warning: " + w + "\n";
  return out;
}

// volume

CommandResult cmd_volume(const VolumeArgs& args) {
  CommandResult res;
  OutputRecord& rec = res.record;
  rec.command = "volume";
  if (args.method != "sum" && args.method != "integral" && args.method != "both") {
    throw UsageError("--method must be sum, integral or both (got '" + args.method + "')");
  }
  if (args.t && args.z) throw UsageError("give at most one of --t and --z");

  Direction dir;
  long n = 0;
  if (args.a) {
    if (args.z) throw UsageError("--z needs a sub-diagonal direction, not --a");
    dir.a = *args.a;
    if (args.d && *args.d != static_cast<long>(dir.a.size())) {
      throw UsageError("--d does not match the length of --a");
    }
    dir.validate();
    n = static_cast<long>(dir.active());
    rec.inputs["a"] = dir.a;
  } else {
    if (!args.d) throw UsageError("--d is required unless --a is given");
    const long d = *args.d;
    n = args.n.value_or(d);
    if (n < 1 || n > d) throw std::domain_error("need 1 <= n <= d (got n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
    dir = Direction::subdiagonal(n, d);
    rec.inputs["d"] = d;
    rec.inputs["n"] = n;
  }

  double t = 0.0;
  std::optional<Rational> z_exact;
  if (args.z) {
    const Rational z = parse_number("--z", *args.z);
    const Rational half = make_rational(n, 2);
    if (!(sgn(z) > 0 && z <= half)) {
      throw std::domain_error("z must satisfy 0 < z <= n/2 = " + to_string(half) + " (got " + to_string(z) + ")");
    }
    z_exact = z;
    t = t_of_z(n, z.get_d());
    rec.inputs["z"] = to_string(z);
  } else if (args.t) {
    t = parse_number("--t", *args.t).get_d();
    rec.inputs["t"] = t;
  } else {
    rec.inputs["t"] = t;
  }
  if (!args.a) {
    const double bound = std::sqrt(static_cast<double>(n)) / 2;
    if (!(t >= 0 && t < bound)) {
      throw std::domain_error("t must be < sqrt(n)/2 = " + format_sig(bound, 7) + " and >= 0 (got " +
                              format_shortest(t) + ")");
    }
  }
  rec.inputs["method"] = args.method;

  const SectionQuery q{dir, t};
  q.validate();
  rec.results["t"] = t;
  std::ostringstream pretty;
  const bool sum = args.method != "integral";
  const bool integral = args.method != "sum";
  double v_sum = 0;
  double v_int = 0;
  if (sum) {
    v_sum = vertex_sum_volume(q, SumMode::Exact);
    rec.results[integral ? "volume_sum" : "volume"] = v_sum;
  }
  if (integral) {
    const QuadratureResult r = polya_volume(q);
    v_int = r.value;
    rec.results[sum ? "volume_integral" : "volume"] = v_int;
    rec.results["integral_error_estimate"] = r.error_estimate;
    rec.results["truncation"] = r.truncation;
  }
  if (z_exact && n >= 2) {
    const SqrtMultiple v = subdiagonal_volume(n, *z_exact);
    std::string s = to_string(v.coeff);
    if (v.radicand != 1 && sgn(v.coeff) != 0) s += "*sqrt(" + std::to_string(v.radicand) + ")";
    rec.results["volume_exact"] = s;
  }

  if (sum && integral) {
    const double diff = std::fabs(v_sum - v_int);
    rec.results["discrepancy"] = diff;
    pretty << "V (vertex sum) = " << format_fixed(v_sum) << "\n"
           << "V (integral)   = " << format_fixed(v_int) << "\n"
           << "|difference|   = " << format_sig(diff, 3) << "\n";
  } else {
    pretty << "V = " << format_fixed(sum ? v_sum : v_int) << "\n";
  }
  if (rec.results.contains("volume_exact")) pretty << "exact: " << rec.results["volume_exact"].get<std::string>() << "\n";
  res.pretty = pretty.str();
  return res;
}

// classify

namespace {

// Position of z relative to a root: -1 below, 0 at, +1 above. `s` is the sign
// at z of the criterion the root belongs to, `sign_below` its sign just left of
// the root; they settle the case where z falls inside the isolating interval.
int side_of(const CertifiedRoot& r, const Rational& z, std::optional<int> s, int sign_below) {
  if (r.exact) return sgn(Rational(z - r.value));
  if (z <= r.interval.lo) return -1;
  if (z >= r.interval.hi) return 1;
  if (s) return *s == 0 ? 0 : (*s == sign_below ? -1 : 1);
  return z < r.value ? -1 : 1;
}

std::string rho_region(const RhoTriple& rho, const Extremality& e, long n) {
  const Rational& z = e.z;
  std::optional<int> s1 = e.s1_sign;
  std::optional<int> s2 = e.s2_sign;
  if (!s2 && e.z_exact) s2 = sgn(build_S2(n).eval(z));
  if (!e.z_exact) {
    // A zero sign on an irrational z only says "too close to call".
    if (s1 == 0) s1.reset();
    if (s2 == 0) s2.reset();
  }
  struct Mark {
    const CertifiedRoot* root;
    std::optional<int> sign;
    int below;
    const char* name;
  };
  const Mark marks[] = {{&rho.rho_plus, s1, -1, "rho_plus"},
                        {&rho.rho_circ, s2, 1, "rho_circ"},
                        {&rho.rho_minus, s1, 1, "rho_minus"}};
  const char* lower = "0";
  for (const Mark& m : marks) {
    const int side = side_of(*m.root, z, m.sign, m.below);
    if (side == 0) return m.name;
    if (side < 0) return std::string("(") + lower + ", " + m.name + ")";
    lower = m.name;
  }
  return "(rho_minus, " + to_string(make_rational(n, 2)) + "]";
}

}  // namespace

CommandResult cmd_classify(const ClassifyArgs& args) {
  CommandResult res;
  OutputRecord& rec = res.record;
  rec.command = "classify";
  if (args.t && args.z) throw UsageError("give at most one of --t and --z");
  const SubdiagonalSpec spec{args.n.value_or(args.d), args.d};
  spec.validate();
  rec.inputs["d"] = spec.d;
  rec.inputs["n"] = spec.n;

  const Rational eps = args.eps ? parse_number("--eps", *args.eps) : default_classify_eps();
  if (sgn(eps) <= 0) throw std::domain_error("eps must be positive");
  Extremality e;
  if (args.z) {
    const Rational z = parse_number("--z", *args.z);
    rec.inputs["z"] = to_string(z);
    e = classify_at_z(spec, z);
  } else {
    const Rational t = args.t ? parse_number("--t", *args.t) : Rational(0);
    rec.inputs["t"] = args.t.value_or("0");
    e = classify(spec, t, eps);
  }
  rec.inputs["eps"] = to_string(eps);

  rec.results["z"] = exact_or_decimal(e.z, e.z_exact);
  rec.results["z_exact"] = e.z_exact;
  rec.results["t"] = e.t;
  rec.results["s1_sign"] = e.s1_sign;
  rec.results["s2_sign"] = sign_json(e.s2_sign);
  rec.results["kind"] = to_string(e.kind);
  rec.results["threshold_z"] = threshold_z(spec.n);

  std::ostringstream pretty;
  pretty << "n = " << spec.n << ", d = " << spec.d << (spec.diagonal() ? " (diagonal)" : " (sub-diagonal)") << "\n"
         << "z = " << (e.z_exact ? to_string(e.z) + " = " : std::string("~ ")) << format_sig(e.z.get_d(), 10)
         << "\n"
         << "sign S1 = " << sign_char(e.s1_sign);
  if (e.s2_sign) pretty << ", sign S2 = " << sign_char(*e.s2_sign);
  pretty << "\n";

  try {
    const RhoTriple rho = solve_rho(spec.n);
    json r;
    r["rho_plus"] = rho.rho_plus.approx();
    r["rho_circ"] = rho.rho_circ.approx();
    r["rho_minus"] = rho.rho_minus.approx();
    rec.results["rho"] = r;
    if (rho.pattern_ok) {
      const std::string region = rho_region(rho, e, spec.n);
      rec.results["rho_interval"] = region;
      pretty << "rho_plus = " << format_sig(rho.rho_plus.approx()) << ", rho_circ = "
             << format_sig(rho.rho_circ.approx()) << ", rho_minus = " << format_sig(rho.rho_minus.approx())
             << "\n"
             << "z in " << region << "\n";
    } else {
      rec.warnings.push_back("roots of S1/S2 are not ordered rho_plus < rho_circ < rho_minus for n = " +
                             std::to_string(spec.n));
    }
  } catch (const PatternViolation& v) {
    rec.warnings.push_back(v.what());
  }
  pretty << to_string(e.kind) << "\n";
  res.pretty = pretty.str();
  return res;
}

// roots

namespace {

json root_json(const CertifiedRoot& r) {
  json j;
  j["value"] = r.approx();
  j["exact"] = r.exact;
  if (r.exact) j["exact_value"] = to_string(r.value);
  j["lo"] = to_string(r.interval.lo);
  j["hi"] = to_string(r.interval.hi);
  j["width"] = r.interval.width().get_d();
  return j;
}

std::string root_line(const char* name, const CertifiedRoot& r) {
  std::string s = std::string(name) + " = " + format_sig(r.approx(), 12);
  if (r.exact) return s + "  (exact: " + to_string(r.value) + ")";
  return s + "  (width " + format_sig(r.interval.width().get_d(), 2) + ")";
}

RootMethod parse_method(const std::string& m) {
  if (m == "descartes") return RootMethod::Descartes;
  if (m == "sturm") return RootMethod::Sturm;
  throw UsageError("--method for roots must be descartes or sturm (got '" + m + "')");
}

}  // namespace

CommandResult cmd_roots(const RootsArgs& args) {
  CommandResult res;
  OutputRecord& rec = res.record;
  rec.command = "roots";
  const RootMethod method = parse_method(args.method);
  const Rational eps = args.eps ? parse_number("--eps", *args.eps) : default_table_eps();
  if (sgn(eps) <= 0) throw std::domain_error("eps must be positive");
  rec.inputs["n"] = args.n;
  rec.inputs["eps"] = to_string(eps);
  rec.inputs["method"] = args.method;

  const RhoTriple rho = solve_rho(args.n, eps, method);
  rec.results["rho_plus"] = root_json(rho.rho_plus);
  rec.results["rho_circ"] = root_json(rho.rho_circ);
  rec.results["rho_minus"] = root_json(rho.rho_minus);
  rec.results["pattern_ok"] = rho.pattern_ok;
  rec.results["s1_pattern"] = describe(sign_pattern(build_S1(args.n), method));
  rec.results["s2_pattern"] = describe(sign_pattern(build_S2(args.n), method));
  if (!rho.pattern_ok) {
    rec.warnings.push_back("expected rho_plus < rho_circ < rho_minus");
    res.code = ExitCode::PatternViolation;
  }

  std::ostringstream pretty;
  pretty << "n = " << args.n << "\n"
         << root_line("rho_plus ", rho.rho_plus) << "\n"
         << root_line("rho_circ ", rho.rho_circ) << "\n"
         << root_line("rho_minus", rho.rho_minus) << "\n"
         << "S1: " << rec.results["s1_pattern"].get<std::string>() << "\n"
         << "S2: " << rec.results["s2_pattern"].get<std::string>() << "\n"
         << "pattern " << (rho.pattern_ok ? "ok" : "VIOLATED") << "\n";
  res.pretty = pretty.str();
  return res;
}

// table

CommandResult cmd_table(const TableArgs& args) {
  CommandResult res;
  OutputRecord& rec = res.record;
  rec.command = "table";
  if (args.dmin < 4) throw std::domain_error("dmin must be >= 4 (got " + std::to_string(args.dmin) + ")");
  if (args.dmax < args.dmin) throw std::domain_error("dmax must be >= dmin");
  const Rational eps = args.eps ? parse_number("--eps", *args.eps) : default_table_eps();
  if (sgn(eps) <= 0) throw std::domain_error("eps must be positive");
  rec.inputs["dmin"] = args.dmin;
  rec.inputs["dmax"] = args.dmax;
  rec.inputs["eps"] = to_string(eps);

  const std::vector<TableRow> rows = table(args.dmin, args.dmax, eps);
  json jrows = json::array();
  std::string csv = "d,rho_minus,rho_circ,rho_plus\n";
  std::ostringstream pretty;
  pretty << "   d   rho_minus    rho_circ    rho_plus\n";
  bool any_exact = false;
  auto cell = [&](double v, bool exact) {
    std::string s = format_sig(v);
    if (exact) {
      s += "*";
      any_exact = true;
    }
    s.insert(0, 12 - std::min<std::size_t>(12, s.size()), ' ');
    return s;
  };
  for (const TableRow& r : rows) {
    json j;
    j["d"] = r.d;
    if (r.error) {
      j["error"] = *r.error;
      rec.warnings.push_back("d = " + std::to_string(r.d) + ": " + *r.error);
      res.code = ExitCode::PatternViolation;
      csv += std::to_string(r.d) + ",,,\n";
      pretty << (r.d < 10 ? "   " : (r.d < 100 ? "  " : " ")) << r.d << "   error: " << *r.error << "\n";
      jrows.push_back(j);
      continue;
    }
    j["rho_minus"] = r.rho_minus;
    j["rho_circ"] = r.rho_circ;
    j["rho_plus"] = r.rho_plus;
    j["rho_minus_exact"] = r.minus_exact;
    j["rho_circ_exact"] = r.circ_exact;
    j["rho_plus_exact"] = r.plus_exact;
    j["pattern_ok"] = r.pattern_ok;
    jrows.push_back(j);
    if (!r.pattern_ok) {
      rec.warnings.push_back("d = " + std::to_string(r.d) + ": roots out of order");
      res.code = ExitCode::PatternViolation;
    }
    csv += std::to_string(r.d) + "," + format_sig(r.rho_minus) + "," + format_sig(r.rho_circ) + "," +
           format_sig(r.rho_plus) + "\n";
    std::string d = std::to_string(r.d);
    d.insert(0, 4 - std::min<std::size_t>(4, d.size()), ' ');
    pretty << d << cell(r.rho_minus, r.minus_exact) << cell(r.rho_circ, r.circ_exact)
           << cell(r.rho_plus, r.plus_exact) << "\n";
  }
  if (any_exact) pretty << "* exact rational root\n";
  rec.results["rows"] = jrows;
  res.csv = csv;
  res.pretty = pretty.str();
  return res;
}

// sweep

CommandResult cmd_sweep(const SweepArgs& args) {
  CommandResult res;
  OutputRecord& rec = res.record;
  rec.command = "sweep";
  const SubdiagonalSpec spec{args.n.value_or(args.d), args.d};
  spec.validate();
  if (args.samples < 2) throw std::domain_error("samples must be >= 2 (got " + std::to_string(args.samples) + ")");
  rec.inputs["d"] = spec.d;
  rec.inputs["n"] = spec.n;
  rec.inputs["samples"] = args.samples;
  if (args.out) rec.inputs["out"] = *args.out;

  const PiecewisePolynomial s1 = build_S1(spec.n);
  const PiecewisePolynomial s2 = build_S2(spec.n);
  const double root_n = std::sqrt(static_cast<double>(spec.n));
  const double step = root_n / 2 / static_cast<double>(args.samples);
  std::string csv = "t,z,V,S1,S2,kind\n";
  for (long k = 0; k < args.samples; ++k) {
    const double t = static_cast<double>(k) * step;
    const double z = z_of_t(spec.n, t);
    const Rational zq = from_double(z);
    const double v = subdiagonal_volume(spec.n, zq).value();
    const Extremality e = classify(spec, t);
    csv += format_shortest(t) + "," + format_shortest(z) + "," + format_shortest(v) + "," +
           format_shortest(s1.eval(zq).get_d()) + "," + format_shortest(s2.eval(zq).get_d()) + "," +
           to_string(e.kind) + "\n";
  }
  rec.results["rows"] = args.samples;

  if (args.out) {
    std::ofstream f(*args.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + *args.out + "' for writing");
    f << csv;
    f.close();
    if (!f) throw IoError("write to '" + *args.out + "' failed");
    rec.results["path"] = *args.out;
    res.pretty = "wrote " + std::to_string(args.samples) + " rows to " + *args.out + "\n";
  } else {
    res.csv = csv;
    res.pretty = csv;
  }
  return res;
}

// verify

CommandResult cmd_verify(const VerifyArgs& args) {
  CommandResult res;
  OutputRecord& rec = res.record;
  rec.command = "verify";
  if (args.dmax < 4) throw std::domain_error("dmax must be >= 4 (got " + std::to_string(args.dmax) + ")");
  rec.inputs["suite"] = args.suite;
  rec.inputs["dmax"] = args.dmax;

  std::vector<CheckResult> checks;
  try {
    checks = run_suite(args.suite, args.dmax);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t failed = 0;
  json jchecks = json::array();
  std::ostringstream pretty;
  std::string csv = "suite,name,passed,detail\n";
  for (const CheckResult& c : checks) {
    failed += !c.passed;
    json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    jchecks.push_back(j);
    pretty << (c.passed ? "PASS " : "FAIL ") << c.suite << "/" << c.name;
    if (!c.detail.empty()) pretty << ": " << c.detail;
    pretty << "\n";
    std::string detail = c.detail;
    for (char& ch : detail) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    csv += c.suite + "," + c.name + "," + (c.passed ? "true" : "false") + "," + detail + "\n";
  }
  rec.results["passed"] = checks.size() - failed;
  rec.results["failed"] = failed;
  rec.results["checks"] = jchecks;
  pretty << checks.size() - failed << " passed, " << failed << " failed\n";
  if (failed) res.code = ExitCode::VerificationFailure;
  res.pretty = pretty.str();
  res.csv = csv;
  return res;
}

}  // namespace cubesec
