#pragma once

// Certified evaluation of the transcendental pieces: the dilogarithm,
// logarithmic tails and weighted geometric power sums. Series are summed in
// long double with explicit rounding and truncation bounds, then rounded
// outward to double.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "bohr/class_id.hpp"
#include "bohr/enclosure.hpp"

namespace bohr {

inline constexpr double kDefaultSeriesTol = 1e-13;

// Hard cap on summed terms; past it the truncation bound is folded into the
// upper endpoint so the result stays sound but may exceed `tol` in width.
inline constexpr std::int64_t kMaxSeriesTerms = 5'000'000;

/// Σ_{n>=start} w(n)^p r^{pn} for 0 <= r < 1.
///
/// `weight(n)` returns w(n) >= 0 as long double (relative error within a few
/// long-double ulps); `weight_sup(m)` returns an upper bound on w(n) for all
/// n >= m. Truncation stops at the first index M whose tail bound
/// sup^p r^{pM} / (1 - r^p) drops below tol/2.
template <class Weight, class WeightSup>
Enclosure weighted_power_series(Weight&& weight, WeightSup&& weight_sup, double p, std::int64_t start,
                                double r, double tol) {
  using ld = long double;
  constexpr ld eps = std::numeric_limits<ld>::epsilon();
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("power series: r must lie in [0, 1)");
  if (!(p > 0.0)) throw std::domain_error("power series: exponent must be positive");
  if (start < 1) throw std::domain_error("power series: start index must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("power series: tol must be positive");

  const bool unit_power = (p == 1.0);
  const ld q = unit_power ? static_cast<ld>(r) : std::pow(static_cast<ld>(r), static_cast<ld>(p));
  if (!(q < 1.0L)) throw std::domain_error("power series: r^p must be < 1");
  if (q == 0.0L) return {0.0, 0.0};

  const ld tail_den = 1.0L - q * (1.0L + 4.0L * eps);
  ld qn = std::pow(q, static_cast<ld>(start));
  ld sum = 0.0L;
  ld err = 0.0L;
  ld tail = 0.0L;
  std::int64_t n = start;
  std::int64_t count = 0;
  for (;;) {
    const ld w = weight(n);
    const ld term = (unit_power ? w : std::pow(w, static_cast<ld>(p))) * qn;
    sum += term;
    err += term * (5.0L * static_cast<ld>(n) + 8.0L) * eps;
    ++count;
    qn *= q;
    ++n;
    const ld sup = weight_sup(n);
    const ld sup_p = unit_power ? sup : std::pow(sup, static_cast<ld>(p));
    tail = sup_p * qn * (1.0L + (5.0L * static_cast<ld>(n) + 8.0L) * eps) / tail_den;
    if (tail < 0.5L * tol || count >= kMaxSeriesTerms) break;
  }
  err += static_cast<ld>(count) * (eps * sum + std::numeric_limits<ld>::denorm_min());
  const ld lo = sum - err;
  return {lo > 0.0L ? detail::round_down(lo) : 0.0, detail::round_up(sum + err + tail)};
}

/// Finite sum Σ_{first <= n < last} w(n) r^n.
template <class Weight>
Enclosure weighted_power_prefix(Weight&& weight, std::int64_t first, std::int64_t last, double r) {
  using ld = long double;
  constexpr ld eps = std::numeric_limits<ld>::epsilon();
  if (r < 0.0) throw std::domain_error("power prefix: r must be nonnegative");
  ld sum = 0.0L;
  ld err = 0.0L;
  ld rn = std::pow(static_cast<ld>(r), static_cast<ld>(first));
  for (std::int64_t n = first; n < last; ++n) {
    const ld term = weight(n) * rn;
    sum += term;
    err += term * (3.0L * static_cast<ld>(n) + 8.0L) * eps;
    rn *= r;
  }
  err += static_cast<ld>(std::max<std::int64_t>(last - first, 0)) *
         (eps * sum + std::numeric_limits<ld>::denorm_min());
  const ld lo = sum - err;
  return {lo > 0.0L ? detail::round_down(lo) : 0.0, detail::round_up(sum + err)};
}

/// π² as a tight enclosure.
Enclosure pi_squared();
/// log 2 as a tight enclosure.
Enclosure log_two();

/// Li2(x) = Σ_{n>=1} x^n / n^2 on [0, 1].
///
/// Direct series for x <= 1/2; the reflection
/// Li2(x) = π²/6 - log(x) log(1-x) - Li2(1-x) above that; π²/6 at x = 1.
Enclosure li2(double x);

/// Σ_{n>=N} r^n / n^2 = Li2(r) - Σ_{n<N} r^n / n^2, for r in [0, 1], N >= 1.
Enclosure li2_tail(double r, int N);

/// Σ_{n>=N} r^n / n = -log(1-r) - Σ_{n<N} r^n / n, for r in [0, 1), N >= 1.
Enclosure tail_log_series(double r, int N);

/// Σ_{n>=start} c_n^p r^{pn}, c_n the class coefficient bound.
/// Requires p >= 1, start >= 2, 0 <= r < 1. Width <= tol.
Enclosure power_sum(ClassId cls, double p, int start, double r, double tol = kDefaultSeriesTol);

}  // namespace bohr
