#include "cubesec/commands.hpp"
#include "cubesec/rational.hpp"
#include "cubesec/rho.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace cubesec;

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

struct Common {
  std::string format = "pretty";
  std::string out;
};

void add_common(CLI::App* sub, Common& c, bool with_out = true) {
  sub->add_option("--format", c.format, "pretty, csv or json")->check(CLI::IsMember({"pretty", "csv", "json"}));
  if (with_out) sub->add_option("--out", c.out, "write the rendered output to this file");
}

// --a takes a comma-separated list as one token: --a 0.5,0.5,0.7
std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(parse_rational(item).get_d());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--a: ") + e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int emit(const CommandResult& r, const Common& c) {
  const std::string text = render(r, parse_format(c.format));
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + c.out + "' for writing");
    f << text;
    if (!f) throw IoError("write to '" + c.out + "' failed");
  }
  return code(r.code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperplane sections of the unit hypercube: volumes, extremality criteria and critical roots"};
  app.require_subcommand(1);

  Common vc;
  VolumeArgs va;
  std::string a_list;
  long vd = 0, vn = 0;
  std::string vt, vz;
  auto* volume = app.add_subcommand("volume", "section volume at an order-n sub-diagonal (or --a)");
  volume->add_option("--d", vd, "ambient dimension");
  volume->add_option("--n", vn, "sub-diagonal order (default d)");
  volume->add_option("--t", vt, "distance from the centre");
  volume->add_option("--z", vz, "z = n/2 - t sqrt(n), exact p/q");
  volume->add_option("--method", va.method, "sum, integral or both");
  volume->add_option("--a", a_list, "explicit direction, comma-separated");
  add_common(volume, vc);

  Common cc;
  ClassifyArgs ca;
  long cn = 0;
  std::string ct, cz, ceps;
  auto* classify = app.add_subcommand("classify", "local extremality at an order-n sub-diagonal");
  classify->add_option("--d", ca.d, "ambient dimension")->required();
  classify->add_option("--n", cn, "sub-diagonal order (default d)");
  classify->add_option("--t", ct, "distance from the centre, decimal or p/q");
  classify->add_option("--z", cz, "z = n/2 - t sqrt(n), exact p/q");
  classify->add_option("--eps", ceps, "z precision below which an open sign is Inconclusive");
  add_common(classify, cc);

  Common rc;
  RootsArgs ra;
  long rd = 0;
  std::string reps;
  auto* roots = app.add_subcommand("roots", "certified rho_plus, rho_circ, rho_minus for one n");
  roots->add_option("--n", ra.n, "order");
  roots->add_option("--d", rd, "same as --n");
  roots->add_option("--eps", reps, "isolating interval width");
  roots->add_option("--method", ra.method, "descartes or sturm");
  add_common(roots, rc);

  Common tc;
  TableArgs ta;
  std::string teps;
  auto* tablecmd = app.add_subcommand("table", "critical roots for a range of dimensions");
  tablecmd->add_option("--dmin", ta.dmin, "first dimension");
  tablecmd->add_option("--dmax", ta.dmax, "last dimension");
  tablecmd->add_option("--eps", teps, "isolating interval width");
  add_common(tablecmd, tc);

  Common sc;
  SweepArgs sa;
  long sn = 0;
  std::string sout;
  auto* sweep = app.add_subcommand("sweep", "t,z,V,S1,S2,kind over a uniform t grid");
  sweep->add_option("--d", sa.d, "ambient dimension")->required();
  sweep->add_option("--n", sn, "sub-diagonal order (default d)");
  sweep->add_option("--samples", sa.samples, "number of grid points");
  sweep->add_option("--out", sout, "CSV destination (stdout when absent)");
  sweep->add_option("--format", sc.format, "pretty, csv or json")->check(CLI::IsMember({"pretty", "csv", "json"}));

  Common fc;
  VerifyArgs fa;
  auto* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--suite", fa.suite, "formulas, criteria, rho, props or all");
  verify->add_option("--dmax", fa.dmax, "largest dimension checked");
  add_common(verify, fc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc_ = app.exit(e);
    return rc_ == 0 ? 0 : code(ExitCode::Usage);
  }

  try {
    if (*volume) {
      if (volume->count("--d")) va.d = vd;
      if (volume->count("--n")) va.n = vn;
      if (volume->count("--t")) va.t = vt;
      if (volume->count("--z")) va.z = vz;
      if (volume->count("--a")) va.a = parse_list(a_list);
      return emit(cmd_volume(va), vc);
    }
    if (*classify) {
      if (classify->count("--n")) ca.n = cn;
      if (classify->count("--t")) ca.t = ct;
      if (classify->count("--z")) ca.z = cz;
      if (classify->count("--eps")) ca.eps = ceps;
      return emit(cmd_classify(ca), cc);
    }
    if (*roots) {
      if (roots->count("--n") && roots->count("--d") && ra.n != rd) throw UsageError("--n and --d disagree");
      if (!roots->count("--n")) {
        if (!roots->count("--d")) throw UsageError("roots needs --n (or --d)");
        ra.n = rd;
      }
      if (roots->count("--eps")) ra.eps = reps;
      return emit(cmd_roots(ra), rc);
    }
    if (*tablecmd) {
      if (tablecmd->count("--eps")) ta.eps = teps;
      return emit(cmd_table(ta), tc);
    }
    if (*sweep) {
      if (sweep->count("--n")) sa.n = sn;
      if (sweep->count("--out")) sa.out = sout;
      return emit(cmd_sweep(sa), sc);
    }
    if (*verify) return emit(cmd_verify(fa), fc);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return code(ExitCode::Usage);
  } catch (const PatternViolation& e) {
    std::cerr << "pattern violation: " << e.what() << "\n";
    return code(ExitCode::PatternViolation);
  } catch (const std::exception& e) {
    // Domain errors, accuracy failures and I/O problems.
    std::cerr << "error: " << e.what() << "\n";
    return code(ExitCode::Domain);
  }
  return code(ExitCode::Usage);
}
