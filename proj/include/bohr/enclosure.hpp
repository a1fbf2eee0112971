#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bohr {

// Every arithmetic combination widens each endpoint outward by this many
// units in the last place. Stands in for directed rounding.
inline constexpr int kWidenUlps = 4;

namespace detail {

inline double step_down(double x, int ulps = kWidenUlps) {
  for (int i = 0; i < ulps; ++i) {
    x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  }
  return x;
}

inline double step_up(double x, int ulps = kWidenUlps) {
  for (int i = 0; i < ulps; ++i) {
    x = std::nextafter(x, std::numeric_limits<double>::infinity());
  }
  return x;
}

// Largest double <= v.
inline double round_down(long double v) {
  auto d = static_cast<double>(v);
  if (static_cast<long double>(d) > v) {
    d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  }
  return d;
}

// Smallest double >= v.
inline double round_up(long double v) {
  auto d = static_cast<double>(v);
  if (static_cast<long double>(d) < v) {
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
  }
  return d;
}

}  // namespace detail

/// A closed interval [lo, hi] certified to contain a real quantity.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Enclosure() = default;
  // Implicit so that exact doubles mix freely into expressions.
  constexpr Enclosure(double value) : lo(value), hi(value) {}  // NOLINT
  constexpr Enclosure(double lower, double upper) : lo(lower), hi(upper) {}

  /// Encloses `value ± abs_err`, rounding outward to double.
  static Enclosure from_estimate(long double value, long double abs_err) {
    return {detail::round_down(value - abs_err), detail::round_up(value + abs_err)};
  }

  [[nodiscard]] double mid() const { return 0.5 * (lo + hi); }
  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] bool contains(double x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool certainly_negative() const { return hi < 0.0; }
  [[nodiscard]] bool certainly_positive() const { return lo > 0.0; }

  /// Same enclosure grown by `delta` on both sides.
  [[nodiscard]] Enclosure inflated(double delta) const {
    return {detail::step_down(lo - delta, 1), detail::step_up(hi + delta, 1)};
  }
};

inline Enclosure widened(double lo, double hi) {
  return {detail::step_down(lo), detail::step_up(hi)};
}

namespace detail {

// A floating-point sum or difference that comes out exactly zero is exact
// (gradual underflow), so zero endpoints are kept as is.
inline Enclosure widened_sum(double lo, double hi) {
  return {lo == 0.0 ? 0.0 : step_down(lo), hi == 0.0 ? 0.0 : step_up(hi)};
}

inline bool is_exact_zero(Enclosure a) { return a.lo == 0.0 && a.hi == 0.0; }

}  // namespace detail

inline Enclosure operator-(Enclosure a) { return {-a.hi, -a.lo}; }

inline Enclosure operator+(Enclosure a, Enclosure b) {
  return detail::widened_sum(a.lo + b.lo, a.hi + b.hi);
}

inline Enclosure operator-(Enclosure a, Enclosure b) {
  return detail::widened_sum(a.lo - b.hi, a.hi - b.lo);
}

inline Enclosure operator*(Enclosure a, Enclosure b) {
  if (detail::is_exact_zero(a) || detail::is_exact_zero(b)) return {0.0, 0.0};
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return widened(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

inline Enclosure operator/(Enclosure a, Enclosure b) {
  if (b.contains(0.0)) {
    throw std::domain_error("enclosure division by an interval containing zero");
  }
  if (detail::is_exact_zero(a)) return {0.0, 0.0};
  const double q1 = a.lo / b.lo;
  const double q2 = a.lo / b.hi;
  const double q3 = a.hi / b.lo;
  const double q4 = a.hi / b.hi;
  return widened(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

inline Enclosure& operator+=(Enclosure& a, Enclosure b) { return a = a + b; }
inline Enclosure& operator-=(Enclosure& a, Enclosure b) { return a = a - b; }

inline Enclosure abs(Enclosure a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return -a;
  return {0.0, std::max(-a.lo, a.hi)};
}

inline Enclosure sqr(Enclosure a) {
  if (detail::is_exact_zero(a)) return {0.0, 0.0};
  const Enclosure m = abs(a);
  const Enclosure s = widened(m.lo * m.lo, m.hi * m.hi);
  return {std::max(0.0, s.lo), s.hi};
}

inline Enclosure hull(Enclosure a, Enclosure b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Monotone elementary functions. libm results are assumed accurate to well
// within the widening margin.

/// log(1 - x) for an exact x < 1.
inline Enclosure log1m(double x) {
  if (!(x < 1.0)) throw std::domain_error("log1m: argument must be < 1");
  if (x == 0.0) return {0.0, 0.0};
  const double v = std::log1p(-x);
  return widened(v, v);
}

/// log(1 + x) for an exact x > -1.
inline Enclosure log1p(double x) {
  if (!(x > -1.0)) throw std::domain_error("log1p: argument must be > -1");
  if (x == 0.0) return {0.0, 0.0};
  const double v = std::log1p(x);
  return widened(v, v);
}

inline Enclosure log(Enclosure a) {
  if (!(a.lo > 0.0)) throw std::domain_error("log: argument must be positive");
  return widened(std::log(a.lo), std::log(a.hi));
}

/// x^e for exact x >= 0 and real e.
inline Enclosure pow(double x, double e) {
  if (x < 0.0) throw std::domain_error("pow: negative base");
  if (x == 0.0 && e > 0.0) return {0.0, 0.0};
  const double v = std::pow(x, e);
  return {std::max(0.0, detail::step_down(v)), detail::step_up(v)};
}

inline std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << '[' << e.lo << ", " << e.hi << ']';
}

}  // namespace bohr
