#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bohr/class_specs.hpp"
#include "bohr/functionals.hpp"
#include "bohr/verify.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

ProblemSpec make(ClassId cls, Functional fn) { return {cls, fn, kDefaultSolverTol, std::nullopt}; }

// Direct evaluation of the majorant from its defining pieces, with every
// series summed term by term.
long double brute_majorant(const ProblemSpec& spec, double r) {
  const ClassId cls = spec.cls;
  auto c = [cls](std::int64_t n) { return oracle::coeff(cls, n); };
  const long double g = oracle::brute_series(c, 2, r) + r;  // growth bound = Σ_{n>=1} c_n r^n
  const Functional& fn = spec.functional;
  switch (fn.kind) {
    case FunctionalKind::F1: {
      const long double d =
          1.0L + oracle::brute_series([&](std::int64_t n) { return n * c(n); }, 2, r) / r;
      return g + d * r + oracle::brute_series(c, 2, r);
    }
    case FunctionalKind::F2:
      return r + oracle::brute_series(c, 2, r) + oracle::brute_power_sum(cls, fn.p, 2, r);
    case FunctionalKind::F3: return g + oracle::brute_series(c, fn.N, r);
    case FunctionalKind::F4: return g * g + oracle::brute_series(c, fn.N, r);
  }
  return 0.0L;
}

}  // namespace

TEST_CASE("tokens") {
  CHECK(TheoremId::parse("t2.1") == TheoremId{2, 1});
  CHECK(TheoremId{4, 3}.token() == "t4.3");
  CHECK(TheoremId{3, 2}.class_id() == ClassId::C2);
  CHECK(TheoremId{4, 4}.functional() == FunctionalKind::F4);
  CHECK(TheoremId::of(ClassId::C3, FunctionalKind::F2) == TheoremId{4, 2});
  CHECK_THROWS_AS(TheoremId::parse("t5.1"), std::invalid_argument);
  CHECK_THROWS_AS(TheoremId::parse("t2.9"), std::invalid_argument);
  CHECK_THROWS_AS(TheoremId::parse("x"), std::invalid_argument);
  CHECK(parse_functional("f3") == FunctionalKind::F3);
  CHECK_THROWS_AS(parse_functional("f5"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Functional::f2(0.5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Functional::f3(1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(Functional::f4(0).validate(), std::invalid_argument);
  CHECK_NOTHROW(Functional::f2(1.0).validate());
  CHECK_THROWS_AS(ProblemSpec::for_theorem(TheoremId{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ProblemSpec::for_theorem(TheoremId{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ProblemSpec::for_theorem(TheoremId{2, 1}, 2.0), std::invalid_argument);
  ProblemSpec bad = make(ClassId::C1, Functional::f1());
  bad.tol = 1e-20;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("coefficient tails match direct summation") {
  for (ClassId cls : kAllClasses) {
    for (int N : {2, 3, 5, 10}) {
      for (double r : {0.05, 0.3, 0.6, 0.9}) {
        const long double brute = oracle::brute_series([cls](std::int64_t n) { return oracle::coeff(cls, n); }, N, r);
        const Enclosure e = coefficient_tail(cls, N, r);
        CAPTURE(to_string(cls));
        CAPTURE(N);
        CAPTURE(r);
        CHECK(std::fabs(e.mid() - static_cast<double>(brute)) <= e.width() + 1e-14 * (1.0 + brute));
      }
    }
  }
}

TEST_CASE("majorant and phi spot values") {
  CHECK(std::fabs(majorant(make(ClassId::C3, Functional::f1()), 0.5).mid() - oracle::kMajorantC3F1Half) < 1e-12);
  CHECK(std::fabs(majorant(make(ClassId::C1, Functional::f1()), 0.5).mid() - oracle::kMajorantC1F1Half) < 1e-12);
  CHECK(std::fabs(phi(make(ClassId::C1, Functional::f2(2.0)), 0.5).mid() - oracle::kPhiC1F2p2Half) < 1e-12);
  const Enclosure at0 = phi(make(ClassId::C1, Functional::f1()), 0.0);
  CHECK(std::fabs(at0.mid() - (std::log(2.0) - 1.0)) < 1e-12);
  for (ClassId cls : kAllClasses) {
    CHECK(std::fabs(phi(make(cls, Functional::f4(3)), 0.0).mid() + boundary_distance(cls)) < 1e-15);
  }
}

TEST_CASE("majorant agrees with term-by-term summation") {
  for (const ProblemSpec& spec : standard_configurations()) {
    for (double r : {0.1, 0.25, 0.4, 0.6, 0.8}) {
      const Enclosure e = majorant(spec, r);
      const long double brute = brute_majorant(spec, r);
      CAPTURE(describe(spec));
      CAPTURE(r);
      CHECK(std::fabs(e.mid() - static_cast<double>(brute)) <= e.width() + 1e-12 * (1.0 + brute));
    }
  }
}

TEST_CASE("printed residuals") {
  const double expected = 11.0 / 8.0 - std::log(2.0) / 4.0;
  CHECK(std::fabs(paper_residual(TheoremId{2, 1}, 0.5).mid() - expected) < 1e-10);
  CHECK(std::fabs(paper_residual(TheoremId{4, 1}, 0.5).mid() - 2.17839) < 1e-4);
  CHECK(std::fabs(paper_residual(TheoremId{4, 1}, 0.5).mid() - oracle::kResidualT41Half) < 1e-12);
  CHECK_THROWS_AS(paper_residual(TheoremId{2, 2}, 0.5), std::invalid_argument);
}

TEST_CASE("printed residual equals the scaled objective") {
  std::vector<ProblemSpec> specs = standard_configurations();
  specs.push_back(make(ClassId::C1, Functional::f2(1.0)));
  specs.push_back(make(ClassId::C2, Functional::f2(1.0)));
  specs.push_back(make(ClassId::C2, Functional::f3(6)));
  specs.push_back(make(ClassId::C2, Functional::f4(6)));
  for (const ProblemSpec& spec : specs) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const double r = 0.9 * i / 499.0;
      const ResidualScale s = residual_scale(spec, r);
      CHECK(s.weight.lo > 0.0);
      const double scaled = s.sign * s.weight.mid() * phi(spec, r).mid();
      worst = std::max(worst, std::fabs(paper_residual(spec, r).mid() - scaled));
    }
    CAPTURE(describe(spec));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("phi is strictly increasing") {
  for (const ProblemSpec& spec : standard_configurations()) {
    double prev = -1e300;
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
      const double v = phi(spec, 0.9 * i / 999.0).mid();
      if (!(v > prev)) ++violations;
      prev = v;
    }
    CAPTURE(describe(spec));
    CHECK(violations == 0);
  }
}

TEST_CASE("phi is ordered across classes and nonincreasing in its parameter") {
  const std::vector<Functional> fns = {Functional::f1(), Functional::f2(2.0), Functional::f2(5.0),
                                       Functional::f3(3), Functional::f4(3)};
  for (const Functional& fn : fns) {
    for (int i = 0; i < 200; ++i) {
      const double r = 0.9 * i / 199.0;
      const double a = phi(make(ClassId::C1, fn), r).mid();
      const double b = phi(make(ClassId::C2, fn), r).mid();
      const double c = phi(make(ClassId::C3, fn), r).mid();
      CHECK(c <= b + 1e-10);
      CHECK(b <= a + 1e-10);
    }
  }
  for (ClassId cls : kAllClasses) {
    for (int i = 0; i <= 100; ++i) {
      const double r = 0.9 * i / 100.0;
      for (int N = 2; N < 10; ++N) {
        CHECK(phi(make(cls, Functional::f3(N + 1)), r).mid() <= phi(make(cls, Functional::f3(N)), r).mid() + 1e-12);
        CHECK(phi(make(cls, Functional::f4(N + 1)), r).mid() <= phi(make(cls, Functional::f4(N)), r).mid() + 1e-12);
      }
    }
    // Only where every c_n r^n <= 1; see the decisions ledger.
    for (int i = 0; i <= 100; ++i) {
      const double r = 0.8 * i / 100.0;
      double prev = 1e300;
      for (double p : {1.0, 2.0, 3.0, 5.0, 8.0}) {
        const double v = phi(make(cls, Functional::f2(p)), r).mid();
        CHECK(v <= prev + 1e-12);
        prev = v;
      }
    }
  }
}

TEST_CASE("rhs override") {
  ProblemSpec spec = make(ClassId::C2, Functional::f1());
  CHECK(spec.rhs().contains(0.5));
  spec.target = 0.51;
  CHECK(spec.rhs().contains(0.51));
}
