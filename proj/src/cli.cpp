#include "dz/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dz/errors.hpp"
#include "dz/harness.hpp"

namespace dz {

namespace {

using io::json;
using io::number_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr double kMaxAbsT = 60.0;
constexpr double kFigureTaus[] = {0.0, 0.25, 0.5, 0.75, 1.0};

struct Options {
  std::string f;
  std::string family;
  std::string parity = "even";
  std::string fe = "auto";
  std::string box = "-1:2:1:30";
  std::string t_range;
  std::string point;
  std::string out;
  std::string format;
  int q = 0;
  int label = 0;
  int grid = 20;
  int steps = kDefaultTauSteps;
  int qmax = 21;
  double a = 0.5;
  double tau = 0.5;
  double tol = kResidualTolerance;
  double step = kDefaultScanStep;
  double tmax = 30.0;
  bool increasing_power = false;
  bool parity_given = false;
};

std::vector<double> split_numbers(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + ": " + text);
    }
  }
  if (out.size() != count) throw UsageError(std::string("malformed ") + what + ": " + text);
  for (double x : out)
    if (!std::isfinite(x)) throw UsageError(std::string("non-finite value in ") + what);
  return out;
}

Interval parse_range(const std::string& text) {
  const auto v = split_numbers(text, 2, "t range (expected lo:hi)");
  if (!(v[1] > v[0])) throw UsageError("t range must have lo < hi");
  if (std::abs(v[0]) > kMaxAbsT || std::abs(v[1]) > kMaxAbsT) throw UsageError("t range must lie within |t| <= 60");
  return {v[0], v[1]};
}

Rect parse_box(const std::string& text) {
  const auto v = split_numbers(text, 4, "box (expected sigma_lo:sigma_hi:t_lo:t_hi)");
  if (!(v[1] > v[0]) || !(v[3] > v[2])) throw UsageError("box must have positive width and height");
  if (std::abs(v[2]) > kMaxAbsT || std::abs(v[3]) > kMaxAbsT) throw UsageError("box must lie within |t| <= 60");
  return {v[0], v[1], v[2], v[3]};
}

int parse_parity(const std::string& p) {
  if (p == "even") return 0;
  if (p == "odd") return 1;
  throw UsageError("parity must be even or odd");
}

int parse_family(const std::string& name) {
  if (name.size() < 2 || name[0] != 'q') throw UsageError("family must look like q5");
  try {
    std::size_t used = 0;
    const int q = std::stoi(name.substr(1), &used);
    if (used + 1 != name.size()) throw std::invalid_argument(name);
    return q;
  } catch (const std::exception&) {
    throw UsageError("family must look like q5");
  }
}

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw UsageError("tau must lie in [0, 1]");
}

DirichletCharacter pick_character(int q, int label, int parity) {
  if (q < 1 || q > 10000) throw UsageError("q must lie in [1, 10000]");
  const auto chars = enumerate_characters(q);
  if (label != 0) {
    if (label < 1 || label > static_cast<int>(chars.size())) throw UsageError("character label out of range");
    return chars[static_cast<std::size_t>(label - 1)];
  }
  for (const auto& chi : chars) {
    const auto c = classify(chi);
    if (c.is_real && c.is_primitive && !c.is_principal && c.parity == parity) return chi;
  }
  throw UsageError("no real primitive character of that parity mod " + std::to_string(q));
}

struct Target {
  FunctionSpec f;
  std::optional<FunctionalEquation> fe;
};

DeformationFamily family_of(const Options& o) {
  const int q = o.family.empty() ? o.q : parse_family(o.family);
  return make_family(q, parse_parity(o.parity));
}

Target resolve(const Options& o) {
  Target t{FunctionSpec::zeta(), std::nullopt};
  if (!o.family.empty() || o.f == "phi") {
    check_tau(o.tau);
    const auto fam = family_of(o);
    t = {fam.at(o.tau), fam.shared_fe};
  } else if (o.f == "zeta") {
    t = {FunctionSpec::zeta(), FunctionalEquation::zeta_type(1)};
  } else if (o.f == "hurwitz") {
    t = {FunctionSpec::hurwitz(o.a), std::nullopt};
  } else if (o.f == "f0") {
    if (o.q < 1) throw UsageError("f0 needs --q");
    t = {FunctionSpec::scaled_zeta(o.q), FunctionalEquation::zeta_type(o.q)};
  } else if (o.f == "L") {
    const auto chi = pick_character(o.q, o.label, parse_parity(o.parity));
    t = {FunctionSpec::dirichlet(chi), std::nullopt};
    t.fe = natural_equation(t.f);
  } else if (o.f == "dh") {
    if (o.label == 0) throw UsageError("dh needs --char");
    const auto chi = pick_character(o.q, o.label, 0);
    const auto c = classify(chi);
    t = {dh_construct(chi).f, FunctionalEquation::general(o.q, c.parity, {1.0, 0.0})};
  } else if (o.f.empty()) {
    throw UsageError("choose a function with --f or --family");
  } else {
    throw UsageError("unknown function: " + o.f);
  }

  if (o.fe == "zeta") {
    t.fe = FunctionalEquation::zeta_type(1);
  } else if (o.fe != "auto") {
    const int q = parse_family(o.fe);
    if (q < 1) throw UsageError("equation modulus must be positive");
    t.fe = FunctionalEquation::general(q, parse_parity(o.parity), {1.0, 0.0});
  }
  if (o.increasing_power && t.fe) t.fe->power = PowerExponent::Increasing;
  return t;
}

const FunctionalEquation& require_fe(const Target& t) {
  if (!t.fe) throw UsageError("no functional equation known for " + t.f.describe() + "; pass --fe");
  return *t.fe;
}

json equation_json(const FunctionalEquation& fe) {
  return {{"q", fe.modulus},
          {"parity", fe.parity},
          {"epsilon_re", number_json(fe.epsilon.real())},
          {"epsilon_im", number_json(fe.epsilon.imag())},
          {"power", fe.power == PowerExponent::Decreasing ? "q^(1/2-s)" : "q^(s-1/2)"}};
}

// Writes to --out when given, otherwise to the command's stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

int cmd_chars(const Options& o, std::ostream& out) {
  if (o.qmax < 0 || o.qmax > 10000) throw UsageError("--qmax must lie in [0, 10000]");
  std::vector<CatalogEntry> entries;
  for (int parity : {0, 1}) {
    if (o.parity_given && parse_parity(o.parity) != parity) continue;
    auto part = catalog_self_dual(o.qmax, parity);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  Output sink(o.out, out);
  if (o.format == "json")
    write_json(sink.stream(), io::catalog_json(entries));
  else
    io::write_catalog_table(sink.stream(), entries);
  return kExitOk;
}

int cmd_verify_fe(const Options& o, std::ostream& out) {
  const auto target = resolve(o);
  const auto& fe = require_fe(target);
  const Rect box = parse_box(o.box);
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const auto sweep = residual_sweep(target.f, fe, box, o.grid, o.grid);
  const bool pass = sweep.max_residual < o.tol;

  Output sink(o.out, out);
  if (o.format == "csv") {
    io::write_residual_csv(sink.stream(), sweep);
  } else {
    json skipped = json::array();
    for (const auto& s : sweep.skipped) skipped.push_back(json::array({number_json(s.real()), number_json(s.imag())}));
    write_json(sink.stream(), {{"function", target.f.describe()},
                               {"equation", equation_json(fe)},
                               {"box", io::to_json(box)},
                               {"grid", o.grid},
                               {"points", sweep.points.size()},
                               {"skipped", skipped},
                               {"max_residual", number_json(sweep.max_residual)},
                               {"tolerance", number_json(o.tol)},
                               {"verdict", pass ? "PASS" : "FAIL"}});
  }
  return pass ? kExitOk : kExitClaimFailed;
}

int cmd_zeros_scan(const Options& o, std::ostream& out) {
  const auto target = resolve(o);
  const auto& fe = require_fe(target);
  if (o.t_range.empty()) throw UsageError("zeros scan needs --t lo:hi");
  if (!(o.step > 0.0)) throw UsageError("--step must be positive");
  const auto zeros = scan_line_zeros(target.f, fe, parse_range(o.t_range), o.step);
  Output sink(o.out, out);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& z : zeros) arr.push_back(io::to_json(z));
    write_json(sink.stream(), arr);
  } else {
    io::write_zero_csv(sink.stream(), zeros);
  }
  return kExitOk;
}

int cmd_zeros_count(const Options& o, std::ostream& out) {
  const auto target = resolve(o);
  const Rect box = parse_box(o.box);
  const auto report = count_zeros_box(target.f, box, target.fe ? &*target.fe : nullptr);
  Output sink(o.out, out);
  json j = io::to_json(report);
  j["function"] = target.f.describe();
  write_json(sink.stream(), j);
  return kExitOk;
}

int cmd_zeros_verify(const Options& o, std::ostream& out) {
  const auto target = resolve(o);
  const auto& fe = require_fe(target);
  const auto v = verify_on_line(target.f, fe, parse_box(o.box));
  Output sink(o.out, out);
  json j = io::to_json(v);
  j["function"] = target.f.describe();
  write_json(sink.stream(), j);
  return v.pass ? kExitOk : kExitClaimFailed;
}

int cmd_track(const Options& o, std::ostream& out) {
  if (o.family.empty() && o.q == 0) throw UsageError("track needs --family");
  const auto fam = family_of(o);
  const Interval range = parse_range(o.t_range.empty() ? "0:30" : o.t_range);
  if (range.lo < 0.0) throw UsageError("track needs t >= 0");
  if (o.steps < 10) throw UsageError("--steps must be at least 10");
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);

  json files = json::array();
  const auto open = [&](const std::string& name) {
    std::ofstream f(dir / name);
    if (!f) throw UsageError("cannot write " + (dir / name).string());
    files.push_back(name);
    return f;
  };
  for (double tau : kFigureTaus) {
    auto f = open("zeros_tau_" + io::number(tau) + ".csv");
    io::write_zero_csv(f, scan_line_zeros(fam.at(tau), fam.shared_fe, range));
  }
  const auto pairing = pair_zeros(fam, range, o.steps);
  {
    auto f = open("trajectories.csv");
    io::write_trajectory_csv(f, pairing.trajectories);
  }
  json j = io::to_json(pairing);
  j["family"] = {{"f0", fam.f0.describe()}, {"f1", fam.f1.describe()}, {"degenerate", fam.degenerate}};
  j["tau_steps"] = o.steps;
  j["files"] = files;
  write_json(out, j);
  return pairing.counts_within_one() ? kExitOk : kExitClaimFailed;
}

int cmd_report(const Options& o, std::ostream& out) {
  if (o.q < 3) throw UsageError("report needs --q >= 3 (no real non-principal character below 3)");
  const auto chi = pick_character(o.q, o.label, parse_parity(o.parity));
  if (!(o.tmax > 1.0 && o.tmax <= kMaxAbsT)) throw UsageError("--tmax must lie in (1, 60]");
  if (o.steps < 10) throw UsageError("--steps must be at least 10");
  const auto report = deformation_report(o.q, chi, o.tmax, o.steps);
  Output sink(o.out, out);
  write_json(sink.stream(), report.json);
  return report.all_pass ? kExitOk : kExitClaimFailed;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto target = resolve(o);
  std::vector<io::GridValue> values;
  if (!o.point.empty()) {
    const auto p = split_numbers(o.point, 2, "point (expected sigma:t)");
    const cplx s{p[0], p[1]};
    values.push_back({s, target.f.evaluate(s)});
  } else {
    const Rect box = parse_box(o.box);
    if (o.grid < 2) throw UsageError("--grid must be at least 2");
    for (int i = 0; i < o.grid; ++i) {
      for (int j = 0; j < o.grid; ++j) {
        const cplx s{box.sigma_lo + (box.sigma_hi - box.sigma_lo) * i / (o.grid - 1),
                     box.t_lo + (box.t_hi - box.t_lo) * j / (o.grid - 1)};
        values.push_back({s, target.f.evaluate(s)});
      }
    }
  }
  Output sink(o.out, out);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& v : values)
      arr.push_back({{"re_s", number_json(v.s.real())},
                     {"im_s", number_json(v.s.imag())},
                     {"re_f", number_json(v.f.value.real())},
                     {"im_f", number_json(v.f.value.imag())},
                     {"est_err", number_json(v.f.error_estimate)}});
    write_json(sink.stream(), arr);
  } else {
    io::write_grid_csv(sink.stream(), values);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of Dirichlet-type functions sharing one functional equation", "deform-zeros"};
  Options o;
  app.set_config("--config", "", "key=value file mirroring the flags");
  app.add_option("--f", o.f, "function: zeta, hurwitz, L, f0, dh, phi");
  app.add_option("--family", o.family, "deformation family, e.g. q5");
  app.add_option("--q", o.q, "modulus");
  app.add_option("--char", o.label, "character label (1-based)");
  app.add_option("--a", o.a, "Hurwitz parameter");
  auto* parity = app.add_option("--parity", o.parity, "even or odd");
  app.add_option("--tau", o.tau, "deformation parameter in [0, 1]");
  app.add_option("--fe", o.fe, "functional equation: auto, zeta or qN");
  app.add_flag("--increasing-power", o.increasing_power, "use the power factor q^(s-1/2)");
  app.add_option("--box", o.box, "sigma_lo:sigma_hi:t_lo:t_hi");
  app.add_option("--grid", o.grid, "points per axis");
  app.add_option("--tol", o.tol, "residual tolerance");
  app.add_option("--t", o.t_range, "ordinate range lo:hi");
  app.add_option("--step", o.step, "scan step");
  app.add_option("--s", o.point, "evaluation point sigma:t");
  app.add_option("--steps", o.steps, "tau steps");
  app.add_option("--qmax", o.qmax, "largest modulus in the catalog");
  app.add_option("--tmax", o.tmax, "largest ordinate in the report");
  app.add_option("--out", o.out, "output file (directory for track)");
  app.add_option("--format", o.format, "csv, json or table")->check(CLI::IsMember({"csv", "json", "table"}));

  auto* chars = app.add_subcommand("chars", "catalog of real characters with root number 1")->fallthrough();
  auto* verify_fe = app.add_subcommand("verify-fe", "functional-equation residual sweep")->fallthrough();
  auto* zeros = app.add_subcommand("zeros", "line zeros and box counts")->fallthrough();
  auto* scan = zeros->add_subcommand("scan", "sign changes on the critical line")->fallthrough();
  auto* count = zeros->add_subcommand("count", "argument-principle count in a box")->fallthrough();
  auto* verify = zeros->add_subcommand("verify", "box count against line count")->fallthrough();
  zeros->require_subcommand(1);
  auto* track = app.add_subcommand("track", "zero trajectories of a family")->fallthrough();
  auto* report = app.add_subcommand("report", "full claim-check report as JSON")->fallthrough();
  auto* eval = app.add_subcommand("eval", "evaluate at a point or on a grid")->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  o.parity_given = parity->count() > 0;

  try {
    if (chars->parsed()) return cmd_chars(o, out);
    if (verify_fe->parsed()) return cmd_verify_fe(o, out);
    if (scan->parsed()) return cmd_zeros_scan(o, out);
    if (count->parsed()) return cmd_zeros_count(o, out);
    if (verify->parsed()) return cmd_zeros_verify(o, out);
    if (track->parsed()) return cmd_track(o, out);
    if (report->parsed()) return cmd_report(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace dz
