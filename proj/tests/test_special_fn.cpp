#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bohr/special_fn.hpp"
#include "oracles.hpp"

using namespace bohr;

namespace {

bool encloses(const Enclosure& e, long double v, long double slack = 0.0L) {
  return static_cast<long double>(e.lo) - slack <= v && v <= static_cast<long double>(e.hi) + slack;
}

}  // namespace

TEST_CASE("enclosure arithmetic keeps exact zeros and widens otherwise") {
  const Enclosure z = Enclosure(0.0) * Enclosure(3.0);
  CHECK(z.lo == 0.0);
  CHECK(z.hi == 0.0);
  const Enclosure s = Enclosure(0.1) + Enclosure(0.2);
  CHECK(s.contains(0.1 + 0.2));
  CHECK(s.lo < s.hi);
  CHECK_THROWS_AS(Enclosure(1.0) / Enclosure(-1.0, 1.0), std::domain_error);
  CHECK(bohr::log1m(0.0).hi == 0.0);
  CHECK(bohr::log1p(0.0).lo == 0.0);
  CHECK(sqr(Enclosure(-2.0, 1.0)).lo == 0.0);
}

TEST_CASE("li2 spot values") {
  CHECK(li2(0.0).lo == 0.0);
  CHECK(li2(0.0).hi == 0.0);
  CHECK(li2(0.5).contains(oracle::kLi2Half));
  CHECK(li2(0.25).contains(oracle::kLi2Quarter));
  CHECK(li2(0.9).contains(oracle::kLi2Point9));
  CHECK(li2(0.5).width() < 1e-14);
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  CHECK(std::fabs(li2(1.0).mid() - pi2_6) < 1e-12);
  CHECK(li2(1.0).contains(pi2_6));
  CHECK_THROWS_AS(li2(-0.1), std::domain_error);
  CHECK_THROWS_AS(li2(1.1), std::domain_error);
}

TEST_CASE("li2 agrees with direct summation") {
  for (double x : {0.01, 0.1, 0.3, 0.5, 0.55, 0.7, 0.8, 0.95}) {
    CAPTURE(x);
    CHECK(encloses(li2(x), oracle::brute_li2(x), 1e-16L));
  }
}

TEST_CASE("li2 reflection identity on random arguments") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> dist(1e-6, 1.0 - 1e-6);
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    const double y = 1.0 - x;
    const Enclosure lhs = li2(x) + li2(y);
    const double rhs = pi2_6 - std::log(x) * std::log(y);
    const double width = li2(x).width() + li2(y).width();
    CAPTURE(x);
    CHECK(std::fabs(lhs.mid() - rhs) <= 2.0 * width + 4e-16 * rhs);
  }
}

TEST_CASE("li2 tail and log tail") {
  CHECK(li2_tail(0.5, 1).contains(oracle::kLi2Half));
  CHECK(li2_tail(0.5, 2).contains(oracle::kLi2Half - 0.5));
  const Enclosure t = tail_log_series(0.5, 1);
  CHECK(t.contains(std::log(2.0)));
  const Enclosure t3 = tail_log_series(0.5, 3);
  CHECK(std::fabs(t3.mid() - (std::log(2.0) - 0.5 - 0.125)) < 1e-15);
  for (int N : {2, 3, 7}) {
    const auto brute = oracle::brute_series([](std::int64_t n) { return 1.0L / n; }, N, 0.8);
    CAPTURE(N);
    CHECK(encloses(tail_log_series(0.8, N), brute, 1e-16L));
  }
  CHECK(tail_log_series(0.0, 2).hi == 0.0);
  CHECK_THROWS_AS(tail_log_series(1.0, 2), std::domain_error);
}

TEST_CASE("power_sum spot values") {
  CHECK(std::fabs(power_sum(ClassId::C1, 1.0, 2, 0.5).mid() - 0.8068528194400547) < 1e-13);
  CHECK(std::fabs(power_sum(ClassId::C2, 2.0, 2, 0.5).mid() - 1.0 / 12.0) < 1e-13);
  CHECK(std::fabs(power_sum(ClassId::C3, 2.0, 3, 0.7).mid() - 0.11090317290034305) < 1e-13);
  CHECK(std::fabs(power_sum(ClassId::C1, 1.5, 2, 0.6).mid() - 0.82059120514030703) < 1e-13);
  CHECK(power_sum(ClassId::C1, 1.5, 2, 0.6).width() <= 1e-13);
  CHECK(power_sum(ClassId::C2, 1.0, 2, 0.0).hi == 0.0);
}

TEST_CASE("power_sum rejects bad parameters") {
  CHECK_THROWS_AS(power_sum(ClassId::C1, 0.5, 2, 0.5), std::domain_error);
  CHECK_THROWS_AS(power_sum(ClassId::C1, 1.0, 1, 0.5), std::domain_error);
  CHECK_THROWS_AS(power_sum(ClassId::C1, 1.0, 2, 1.0), std::domain_error);
  CHECK_THROWS_AS(power_sum(ClassId::C1, 1.0, 2, -0.1), std::domain_error);
}

TEST_CASE("power_sum encloses the brute-force partial sum") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> cls_dist(0, 2);
  std::uniform_real_distribution<double> p_dist(1.0, 6.0);
  std::uniform_int_distribution<int> start_dist(2, 12);
  std::uniform_real_distribution<double> r_dist(0.0, 0.95);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const ClassId cls = kAllClasses[cls_dist(rng)];
    const double p = i % 4 == 0 ? 1.0 : p_dist(rng);
    const int start = start_dist(rng);
    const double r = r_dist(rng);
    const Enclosure e = power_sum(cls, p, start, r);
    const long double brute = oracle::brute_power_sum(cls, p, start, r);
    if (!encloses(e, brute)) {
      ++failures;
      MESSAGE("miss: class ", to_string(cls), " p=", p, " start=", start, " r=", r);
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("power_sum monotonicity") {
  for (ClassId cls : kAllClasses) {
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
      const double r = 0.9 * i / 200.0;
      const double v = power_sum(cls, 2.0, 2, r).mid();
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    for (double r : {0.2, 0.5, 0.8}) {
      double prev_p = 1e300;
      for (double p : {1.0, 1.5, 2.0, 3.0, 5.0, 8.0}) {
        const double v = power_sum(cls, p, 2, r).mid();
        CAPTURE(r);
        CAPTURE(p);
        CHECK(v <= prev_p + 1e-12);
        prev_p = v;
      }
      double prev_start = 1e300;
      for (int start = 2; start <= 10; ++start) {
        const double v = power_sum(cls, 1.5, start, r).mid();
        CHECK(v <= prev_start + 1e-12);
        prev_start = v;
      }
    }
  }
}
