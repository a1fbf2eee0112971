#include "bohr/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "bohr/class_specs.hpp"
#include "bohr/crosscheck.hpp"
#include "bohr/extremal.hpp"
#include "bohr/radius_solver.hpp"
#include "bohr/special_fn.hpp"

namespace bohr {

namespace {

// Published values.
constexpr double kRadiusT21 = 0.110377;
constexpr double kRadiusT31 = 0.173417;
constexpr std::array<double, 7> kTable1{0.213087, 0.215411, 0.215573, 0.215584,
                                        0.215584, 0.215585, 0.215585};
constexpr std::array<double, 7> kTable2{0.327553, 0.332707, 0.333265, 0.333326,
                                        0.333332, 0.333333, 0.333333};
constexpr double kLimitC1 = 0.215585;

constexpr double kPrintedTol = 5e-6;
constexpr double kTableTol = 1e-6;
constexpr double kLimitTol = 1e-5;
constexpr double kCrosscheckTol = 1e-10;
constexpr double kEquivalenceTol = 1e-10;

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  ProblemSpec spec(ClassId cls, Functional fn) const {
    ProblemSpec s;
    s.cls = cls;
    s.functional = fn;
    s.tol = options_.tol;
    s.target = options_.target_override[index_of(cls)];
    return s;
  }

  double radius(ClassId cls, Functional fn) const { return solve_radius(spec(cls, fn)).radius; }

  void check(std::string name, const std::function<std::string()>& body) {
    CheckResult result{std::move(name), true, {}};
    try {
      result.detail = body();
      result.pass = result.detail.empty();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

  const VerifyOptions& options() const { return options_; }

 private:
  VerifyOptions options_;
  std::vector<CheckResult> results_;
};

std::string compare_table(const Suite& suite, ClassId cls, const std::array<double, 7>& expected) {
  std::string detail;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double p = static_cast<double>(i + 2);
    const double r = suite.radius(cls, Functional::f2(p));
    if (std::fabs(r - expected[i]) > kTableTol) {
      detail += fmt("p=%.0f gives %.9f; ", p, r);
    }
  }
  return detail;
}

std::string compare_polynomial(const Suite& suite, int index, bool with_N) {
  std::string detail;
  const TheoremId id{3, index};
  const int n_max = with_N ? 6 : 2;
  for (int N = 2; N <= n_max; ++N) {
    const Functional fn = index == 1 ? Functional::f1()
                          : index == 3 ? Functional::f3(N)
                                       : Functional::f4(N);
    const double r = suite.radius(ClassId::C2, fn);
    const double ref = solve_polynomial_crosscheck(id, N);
    if (std::fabs(r - ref) > kCrosscheckTol) detail += fmt("N=%.0f off by %.3e; ", N, r - ref);
  }
  return detail;
}

}  // namespace

std::vector<ProblemSpec> standard_configurations(double tol) {
  std::vector<ProblemSpec> out;
  for (ClassId cls : kAllClasses) {
    std::vector<Functional> fns{Functional::f1(), Functional::f2(2.0), Functional::f2(5.0)};
    for (int N : {2, 3, 5}) fns.push_back(Functional::f3(N));
    for (int N : {2, 3, 5}) fns.push_back(Functional::f4(N));
    for (const Functional& fn : fns) {
      ProblemSpec s;
      s.cls = cls;
      s.functional = fn;
      s.tol = tol;
      out.push_back(s);
    }
  }
  return out;
}

std::string describe(const ProblemSpec& spec) {
  std::string s = spec.theorem().token();
  if (spec.functional.uses_p()) s += fmt(" p=%g", spec.functional.p);
  if (spec.functional.uses_N()) s += " N=" + std::to_string(spec.functional.N);
  return s;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite suite(options);
  const auto configs = standard_configurations(options.tol);

  suite.check("t2.1 radius = 0.110377", [&] {
    const double r = suite.radius(ClassId::C1, Functional::f1());
    return std::fabs(r - kRadiusT21) <= kPrintedTol ? "" : fmt("got %.9f", r);
  });

  suite.check("t3.1 radius = 0.173417, matches 1-6r+r^2+2r^3", [&] {
    const double r = suite.radius(ClassId::C2, Functional::f1());
    const double ref = solve_polynomial_crosscheck({3, 1});
    if (std::fabs(r - kRadiusT31) > kPrintedTol) return fmt("got %.9f", r);
    if (std::fabs(r - ref) > kCrosscheckTol) return fmt("polynomial root %.15f vs %.15f", ref, r);
    return std::string{};
  });

  suite.check("table 1: t2.2 radii for p=2..8",
              [&] { return compare_table(suite, ClassId::C1, kTable1); });
  suite.check("table 2: t3.2 radii for p=2..8",
              [&] { return compare_table(suite, ClassId::C2, kTable2); });
  suite.check("t3.3 radius matches 3r+2r^N-1, N=2..6", [&] { return compare_polynomial(suite, 3, true); });
  suite.check("t3.4 radius matches 1-2r-r^2-2r^N+2r^(N+1), N=2..6",
              [&] { return compare_polynomial(suite, 4, true); });

  suite.check("limit p=30: c1 -> 0.215585, c2 -> 1/3", [&] {
    const double r1 = suite.radius(ClassId::C1, Functional::f2(30.0));
    const double r2 = suite.radius(ClassId::C2, Functional::f2(30.0));
    std::string d;
    if (std::fabs(r1 - kLimitC1) > kLimitTol) d += fmt("c1 %.9f; ", r1);
    if (std::fabs(r2 - 1.0 / 3.0) > kLimitTol) d += fmt("c2 %.9f; ", r2);
    return d;
  });

  for (const ProblemSpec& base : configs) {
    suite.check("sharpness " + describe(base), [&] {
      const ProblemSpec s = suite.spec(base.cls, base.functional);
      const auto report = verify_sharpness(s, solve_radius(s));
      return report.pass ? "" : fmt("gap %.3e at r=%.12f", report.gap, report.radius);
    });
  }

  suite.check("phi strictly increasing on [0, 0.9]", [&] {
    std::string d;
    for (const ProblemSpec& base : configs) {
      const ProblemSpec s = suite.spec(base.cls, base.functional);
      double prev = phi(s, 0.0).mid();
      for (int i = 1; i < 1000; ++i) {
        const double r = 0.9 * i / 999.0;
        const double cur = phi(s, r).mid();
        if (!(cur > prev)) {
          d += describe(s) + fmt(" fails at r=%.6f; ", r);
          break;
        }
        prev = cur;
      }
    }
    return d;
  });

  suite.check("radius ordering c1 <= c2 <= c3", [&] {
    std::string d;
    for (std::size_t k = 0; k < configs.size() / 3; ++k) {
      const Functional fn = configs[k].functional;
      const double r1 = suite.radius(ClassId::C1, fn);
      const double r2 = suite.radius(ClassId::C2, fn);
      const double r3 = suite.radius(ClassId::C3, fn);
      if (!(r1 <= r2 && r2 <= r3)) d += describe(configs[k]) + " order violated; ";
    }
    return d;
  });

  suite.check("f3/f4 radius strictly increasing in N=2.." + std::to_string(options.max_N), [&] {
    std::string d;
    for (ClassId cls : kAllClasses) {
      for (FunctionalKind kind : {FunctionalKind::F3, FunctionalKind::F4}) {
        double prev = -1.0;
        for (int N = 2; N <= options.max_N; ++N) {
          const Functional fn{kind, 1.0, N};
          const double r = suite.radius(cls, fn);
          if (!(r > prev)) d += to_string(cls) + "/" + to_string(kind) + fmt(" at N=%.0f; ", N);
          prev = r;
        }
      }
    }
    return d;
  });

  suite.check("printed residual = s*w*phi on 500 points", [&] {
    std::string d;
    for (const ProblemSpec& s : configs) {
      for (int i = 0; i < 500; ++i) {
        const double r = 0.9 * i / 499.0;
        const auto scale = residual_scale(s, r);
        const double lhs = paper_residual(s, r).mid();
        const double rhs = scale.sign * (scale.weight * phi(s, r)).mid();
        if (std::fabs(lhs - rhs) > kEquivalenceTol) {
          d += describe(s) + fmt(" differs by %.3e at r=%.4f; ", lhs - rhs, r);
          break;
        }
      }
    }
    return d;
  });

  suite.check("li2(1) = pi^2/6", [&] {
    const double basel = std::numbers::pi * std::numbers::pi / 6.0;
    const Enclosure e = li2(1.0);
    return std::fabs(e.mid() - basel) <= 1e-12 ? "" : fmt("got %.17g", e.mid());
  });

  suite.check("li2 reflection identity, 100 points", [&] {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      double x = unit(rng);
      if (x == 0.0) x = 0.5;
      const Enclosure a = li2(x);
      const Enclosure b = li2(1.0 - x);
      const double lhs = a.mid() + b.mid();
      const double rhs = (pi_squared() / 6.0 - log(Enclosure(x)) * log(Enclosure(1.0 - x))).mid();
      if (std::fabs(lhs - rhs) > 2.0 * (a.width() + b.width()) + 1e-15) return fmt("x=%.17g", x);
    }
    return std::string{};
  });

  suite.check("d*(c3) = 1/3 + pi^2/36", [&] {
    const double expected = 1.0 / 3.0 + std::numbers::pi * std::numbers::pi / 36.0;
    return std::fabs(boundary_distance(ClassId::C3) - expected) <= 1e-14 ? "" : "mismatch";
  });

  return suite.take();
}

}  // namespace bohr
