#include "bohr/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bohr {

namespace {

using ld = long double;
constexpr ld kEps = std::numeric_limits<ld>::epsilon();

// Truncation budget for the direct Li2 series; far below double resolution.
constexpr double kLi2SeriesTol = 1e-18;

ld inverse_square(std::int64_t n) {
  const auto nn = static_cast<ld>(n);
  return 1.0L / (nn * nn);
}

Enclosure li2_direct(double x) {
  return weighted_power_series([](std::int64_t n) { return inverse_square(n); },
                               [](std::int64_t m) { return inverse_square(m); }, 1.0, 1, x,
                               kLi2SeriesTol);
}

}  // namespace

Enclosure pi_squared() {
  constexpr ld pi = std::numbers::pi_v<ld>;
  const ld v = pi * pi;
  return Enclosure::from_estimate(v, 4.0L * kEps * v);
}

Enclosure log_two() {
  const ld v = std::log(2.0L);
  return Enclosure::from_estimate(v, 4.0L * kEps * v);
}

Enclosure li2(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("li2: argument must lie in [0, 1]");
  const Enclosure basel = pi_squared() / 6.0;
  if (x == 1.0) return basel;
  if (x <= 0.5) return li2_direct(x);
  // 1 - x is exact for x in (1/2, 1).
  const double y = 1.0 - x;
  return basel - log(Enclosure(x)) * log1m(x) - li2_direct(y);
}

Enclosure li2_tail(double r, int N) {
  if (N < 1) throw std::domain_error("li2_tail: N must be >= 1");
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("li2_tail: r must lie in [0, 1]");
  if (N == 1) return li2(r);
  return li2(r) - weighted_power_prefix([](std::int64_t n) { return inverse_square(n); }, 1, N, r);
}

Enclosure tail_log_series(double r, int N) {
  if (N < 1) throw std::domain_error("tail_log_series: N must be >= 1");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("tail_log_series: r must lie in [0, 1)");
  if (r == 0.0) return {0.0, 0.0};
  const ld neg_log = -std::log1p(-static_cast<ld>(r));
  ld prefix = 0.0L;
  ld prefix_err = 0.0L;
  ld rn = r;
  for (int n = 1; n < N; ++n) {
    const ld term = rn / static_cast<ld>(n);
    prefix += term;
    prefix_err += term * (3.0L * n + 6.0L) * kEps;
    rn *= r;
  }
  prefix_err += static_cast<ld>(N) * kEps * prefix;
  const ld value = neg_log - prefix;
  const ld err = 4.0L * kEps * neg_log + prefix_err + kEps * std::fabs(value);
  const Enclosure e = Enclosure::from_estimate(value, err);
  // Every term of the tail is nonnegative.
  return {std::max(0.0, e.lo), e.hi};
}

Enclosure power_sum(ClassId cls, double p, int start, double r, double tol) {
  if (!(p >= 1.0)) throw std::domain_error("power_sum: p must be >= 1");
  if (start < 2) throw std::domain_error("power_sum: start must be >= 2");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("power_sum: r must lie in [0, 1)");
  const ld sup = coeff_bound_sup(cls);
  return weighted_power_series(
      [cls](std::int64_t n) { return detail::coeff_bound_ld(cls, static_cast<ld>(n)); },
      [sup](std::int64_t) { return sup; }, p, start, r, tol);
}

}  // namespace bohr
