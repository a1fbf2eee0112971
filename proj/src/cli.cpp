#include "bohr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "bohr/class_specs.hpp"
#include "bohr/extremal.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/verify.hpp"

namespace bohr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt_double(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string full_precision(double v) { return fmt_double("%.17g", v); }

struct ProblemArgs {
  std::string theorem;
  std::string class_name;
  std::string functional;
  double p = 0.0;
  int N = 0;
  double tol = kDefaultSolverTol;
  CLI::Option* theorem_opt = nullptr;
  CLI::Option* class_opt = nullptr;
  CLI::Option* functional_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* N_opt = nullptr;

  void attach(CLI::App& cmd, bool allow_class_form) {
    theorem_opt = cmd.add_option("--theorem", theorem, "Theorem token, t2.1 .. t4.4");
    if (allow_class_form) {
      class_opt = cmd.add_option("--class", class_name, "Function class")
                      ->check(CLI::IsMember({"c1", "c2", "c3"}));
      functional_opt = cmd.add_option("--functional", functional, "Bohr-type functional")
                           ->check(CLI::IsMember({"f1", "f2", "f3", "f4"}));
      theorem_opt->excludes(class_opt)->excludes(functional_opt);
      class_opt->needs(functional_opt);
      functional_opt->needs(class_opt);
    }
    p_opt = cmd.add_option("--p", p, "Coefficient power for f2 (real, >= 1)");
    N_opt = cmd.add_option("--N", N, "Tail start index for f3/f4 (integer, >= 2)");
    cmd.add_option("--tol", tol, "Solver bracket tolerance")->capture_default_str();
  }

  ProblemSpec build() const {
    std::optional<double> p_val;
    std::optional<int> N_val;
    if (p_opt->count() > 0) p_val = p;
    if (N_opt->count() > 0) N_val = N;
    try {
      TheoremId id;
      if (theorem_opt->count() > 0) {
        id = TheoremId::parse(theorem);
      } else if (class_opt != nullptr && class_opt->count() > 0) {
        id = TheoremId::of(parse_class(class_name), parse_functional(functional));
      } else {
        throw UsageError("either --theorem or --class with --functional is required");
      }
      return ProblemSpec::for_theorem(id, p_val, N_val, tol);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

OutputRecord solve_record(const ProblemSpec& spec) {
  const RadiusResult result = solve_radius(spec);
  const SharpnessReport report = verify_sharpness(spec, result);
  OutputRecord rec;
  rec.theorem = spec.theorem().token();
  rec.class_name = to_string(spec.cls);
  rec.functional = to_string(spec.functional.kind);
  if (spec.functional.uses_p()) rec.p = spec.functional.p;
  if (spec.functional.uses_N()) rec.N = spec.functional.N;
  rec.radius = result.radius;
  rec.bracket_width = result.bracket_width();
  rec.sharp = report.pass;
  return rec;
}

int cmd_radius(const ProblemArgs& args, const std::string& format, std::ostream& out) {
  const OutputRecord rec = solve_record(args.build());
  if (format == "json") {
    out << to_json(rec) << '\n';
  } else if (format == "csv") {
    out << csv_header() << to_csv_row(rec);
  } else {
    out << to_text(rec) << '\n';
  }
  return rec.sharp ? kExitOk : kExitVerificationFailed;
}

int cmd_table(int which, int p_min, int p_max, double tol, const std::string& format, std::ostream& out) {
  if (which != 1 && which != 2) throw UsageError("table must be 1 or 2");
  if (p_min < 1 || p_max < p_min) throw UsageError("p range must satisfy 1 <= p-min <= p-max");
  if (!(tol >= kMinSolverTol && tol <= kMaxSolverTol)) throw UsageError("tol must lie in [1e-14, 1e-3]");
  const ClassId cls = which == 1 ? ClassId::C1 : ClassId::C2;

  std::vector<std::future<double>> rows;
  for (int p = p_min; p <= p_max; ++p) {
    rows.push_back(std::async(std::launch::async, [cls, p, tol] {
      ProblemSpec spec;
      spec.cls = cls;
      spec.functional = Functional::f2(p);
      spec.tol = tol;
      return solve_radius(spec).radius;
    }));
  }

  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (int p = p_min; p <= p_max; ++p) {
      const double r = rows[static_cast<std::size_t>(p - p_min)].get();
      arr.push_back({{"p", p}, {"radius", r}, {"radius_display", format_radius(r)}});
    }
    out << arr.dump(2) << '\n';
  } else if (format == "text") {
    out << "  p  radius\n";
    for (int p = p_min; p <= p_max; ++p) {
      char line[64];
      std::snprintf(line, sizeof line, "%3d  %s\n", p,
                    format_radius(rows[static_cast<std::size_t>(p - p_min)].get()).c_str());
      out << line;
    }
  } else {
    out << "p,radius\n";
    for (int p = p_min; p <= p_max; ++p) {
      out << p << ',' << format_radius(rows[static_cast<std::size_t>(p - p_min)].get()) << '\n';
    }
  }
  return kExitOk;
}

std::pair<ClassId, double> parse_override(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos) throw UsageError("override must look like c2=0.51");
  try {
    std::size_t used = 0;
    const std::string value = token.substr(eq + 1);
    const double v = std::stod(value, &used);
    if (used != value.size() || !(v > 0.0)) throw std::invalid_argument("bad value");
    return {parse_class(token.substr(0, eq)), v};
  } catch (const std::exception&) {
    throw UsageError("invalid override '" + token + "'");
  }
}

int cmd_verify(const std::vector<std::string>& overrides, int max_N, std::ostream& out) {
  VerifyOptions options;
  for (const auto& token : overrides) {
    const auto [cls, value] = parse_override(token);
    options.target_override[index_of(cls)] = value;
  }
  if (max_N < 3) throw UsageError("max-N must be >= 3");
  options.max_N = max_N;

  const auto results = run_verification(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.pass) {
      ++failed;
      out << "  (" << r.detail << ')';
    }
    out << '\n';
  }
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

void write_sweep(const ProblemSpec& spec, int points, double r_min, double r_max, std::ostream& out) {
  const double d_star = boundary_distance(spec.cls);
  out << "r,lhs_majorant,lhs_extremal,d_star\n";
  for (int i = 0; i < points; ++i) {
    const double r = i + 1 == points ? r_max : r_min + (r_max - r_min) * i / (points - 1);
    out << full_precision(r) << ',' << full_precision(majorant(spec, r).mid()) << ','
        << full_precision(extremal_lhs(spec, r).mid()) << ',' << full_precision(d_star) << '\n';
  }
}

int cmd_sweep(const ProblemArgs& args, int points, double r_min, double r_max, const std::string& path,
              std::ostream& out) {
  const ProblemSpec spec = args.build();
  if (points < 2) throw UsageError("points must be >= 2");
  if (!(r_min >= 0.0 && r_min < r_max && r_max < 1.0)) {
    throw UsageError("grid must satisfy 0 <= r-min < r-max < 1");
  }
  if (path.empty()) {
    write_sweep(spec, points, r_min, r_max, out);
    return kExitOk;
  }
  std::ostringstream buffer;
  write_sweep(spec, points, r_min, r_max, buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << buffer.str();
  if (!file.flush()) throw UsageError("failed writing '" + path + "'");
  return kExitOk;
}

}  // namespace

std::string format_radius(double radius) { return fmt_double("%.6f", radius); }

std::string to_text(const OutputRecord& rec) {
  std::string s = rec.theorem + "  class=" + rec.class_name + "  functional=" + rec.functional;
  if (rec.p) s += "  p=" + fmt_double("%g", *rec.p);
  if (rec.N) s += "  N=" + std::to_string(*rec.N);
  s += "  radius=" + format_radius(rec.radius);
  s += "  bracket_width=" + fmt_double("%.3e", rec.bracket_width);
  s += std::string("  sharp=") + (rec.sharp ? "true" : "false");
  return s;
}

std::string csv_header() { return "theorem,class,functional,p,N,radius,bracket_width,sharp\n"; }

std::string to_csv_row(const OutputRecord& rec) {
  std::string s = rec.theorem + ',' + rec.class_name + ',' + rec.functional + ',';
  if (rec.p) s += fmt_double("%g", *rec.p);
  s += ',';
  if (rec.N) s += std::to_string(*rec.N);
  s += ',' + format_radius(rec.radius) + ',' + fmt_double("%.3e", rec.bracket_width) + ',' +
       (rec.sharp ? "true" : "false") + '\n';
  return s;
}

std::string to_json(const OutputRecord& rec) {
  ordered_json j;
  j["theorem"] = rec.theorem;
  j["class"] = rec.class_name;
  j["functional"] = rec.functional;
  if (rec.p) j["p"] = *rec.p;
  if (rec.N) j["N"] = *rec.N;
  j["radius"] = rec.radius;
  j["radius_display"] = format_radius(rec.radius);
  j["bracket_width"] = rec.bracket_width;
  j["sharp"] = rec.sharp;
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp Bohr and Bohr-Rogosinski radii for close-to-convex classes", "bohr"};
  app.require_subcommand(1);

  std::string format = "text";
  auto* radius = app.add_subcommand("radius", "Solve one radius and check sharpness");
  ProblemArgs radius_args;
  radius_args.attach(*radius, true);
  radius->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* table = app.add_subcommand("table", "Reproduce the radius tables over p (CSV by default)");
  int which = 1;
  int p_min = 2;
  int p_max = 8;
  double table_tol = kDefaultSolverTol;
  std::string table_format = "csv";
  table->add_option("which,--which", which, "1: class c1 (t2.2), 2: class c2 (t3.2)")->required();
  table->add_option("--p-min", p_min, "First p")->capture_default_str();
  table->add_option("--p-max", p_max, "Last p")->capture_default_str();
  table->add_option("--tol", table_tol, "Solver bracket tolerance")->capture_default_str();
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  std::vector<std::string> overrides;
  int max_N = 10;
  verify->add_option("--override-dstar", overrides, "Fault injection: replace d* for a class, e.g. c2=0.51");
  verify->add_option("--max-N", max_N, "Largest N in the N-monotonicity sweep")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Emit majorant/extremal curves as CSV");
  ProblemArgs sweep_args;
  sweep_args.attach(*sweep, false);
  sweep_args.theorem_opt->required();
  int points = 400;
  double r_min = 0.0;
  double r_max = 0.6;
  std::string path;
  sweep->add_option("--points", points, "Grid points")->capture_default_str();
  sweep->add_option("--r-min", r_min, "Grid start")->capture_default_str();
  sweep->add_option("--r-max", r_max, "Grid end")->capture_default_str();
  sweep->add_option("--out", path, "Output CSV path (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (radius->parsed()) return cmd_radius(radius_args, format, out);
    if (table->parsed()) return cmd_table(which, p_min, p_max, table_tol, table_format, out);
    if (verify->parsed()) return cmd_verify(overrides, max_N, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, points, r_min, r_max, path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bohr::cli
