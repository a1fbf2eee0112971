#include "bohr/class_specs.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bohr/special_fn.hpp"

namespace bohr {

namespace {

using ld = long double;
constexpr ld kEps = std::numeric_limits<ld>::epsilon();

void require_open_unit(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error(std::string(what) + ": r must lie in [0, 1)");
}

ld boundary_distance_ld(ClassId cls) {
  switch (cls) {
    case ClassId::C1: return 1.0L - std::log(2.0L);
    case ClassId::C2: return 0.5L;
    case ClassId::C3: {
      constexpr ld pi = std::numbers::pi_v<ld>;
      return 1.0L / 3.0L + pi * pi / 36.0L;
    }
  }
  return 0.0L;
}

// Li2 at r*r, which is generally not representable; Li2 is increasing.
Enclosure li2_of_square(double r) {
  const double sq = r * r;
  if (std::fma(r, r, -sq) == 0.0) return li2(sq);
  const double lo = std::max(0.0, detail::step_down(sq, 1));
  const double hi = std::min(1.0, detail::step_up(sq, 1));
  return hull(li2(lo), li2(hi));
}

}  // namespace

Enclosure growth_upper(ClassId cls, double r) {
  require_open_unit(r, "growth_upper");
  const Enclosure one_minus = Enclosure(1.0) - r;
  switch (cls) {
    case ClassId::C1: return 2.0 * r / one_minus + log1m(r);
    case ClassId::C2: return r / one_minus;
    case ClassId::C3: return 2.0 * r / (3.0 * one_minus) + li2(r) / 3.0;
  }
  return {};
}

Enclosure growth_lower(ClassId cls, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("growth_lower: r must lie in [0, 1]");
  const Enclosure one_plus = Enclosure(1.0) + r;
  switch (cls) {
    case ClassId::C1: return 2.0 * r / one_plus - log1p(r);
    case ClassId::C2: return r / one_plus;
    case ClassId::C3:
      // ∫_0^r log(1+t)/t dt = -Li2(-r) = Li2(r) - Li2(r^2)/2.
      return 2.0 * r / (3.0 * one_plus) + (li2(r) - li2_of_square(r) / 2.0) / 3.0;
  }
  return {};
}

Enclosure distortion_upper(ClassId cls, double r) {
  require_open_unit(r, "distortion_upper");
  const Enclosure one_minus = Enclosure(1.0) - r;
  switch (cls) {
    case ClassId::C1: return (1.0 + Enclosure(r)) / sqr(one_minus);
    case ClassId::C2: return 1.0 / sqr(one_minus);
    case ClassId::C3: {
      const Enclosure log_ratio = (r == 0.0) ? Enclosure(1.0) : -log1m(r) / r;
      return 2.0 / (3.0 * sqr(one_minus)) + log_ratio / 3.0;
    }
  }
  return {};
}

double boundary_distance(ClassId cls) { return static_cast<double>(boundary_distance_ld(cls)); }

Enclosure boundary_distance_enclosure(ClassId cls) {
  if (cls == ClassId::C2) return {0.5, 0.5};
  const ld v = boundary_distance_ld(cls);
  return Enclosure::from_estimate(v, 8.0L * kEps * v);
}

}  // namespace bohr
