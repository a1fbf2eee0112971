#include "bohr/extremal.hpp"

#include <cmath>
#include <cstdint>

#include "bohr/class_specs.hpp"
#include "bohr/special_fn.hpp"

namespace bohr {

namespace {

using ld = long double;

ld abs_extremal_coeff_ld(ClassId cls, std::int64_t n) {
  const auto nn = static_cast<ld>(n);
  switch (cls) {
    case ClassId::C1: return 2.0L - 1.0L / nn;
    case ClassId::C2: return 1.0L;
    case ClassId::C3: return 2.0L / 3.0L + 1.0L / (3.0L * nn * nn);
  }
  return 0.0L;
}

// Σ_{n>=start} |a_n|^p r^{pn} over the extremal coefficients.
Enclosure extremal_series(ClassId cls, double p, int start, double r, double tol) {
  const ld sup = cls == ClassId::C1 ? 2.0L : abs_extremal_coeff_ld(cls, start);
  return weighted_power_series([cls](std::int64_t n) { return abs_extremal_coeff_ld(cls, n); },
                               [sup](std::int64_t) { return sup; }, p, start, r, tol);
}

void require_extremal_domain(ClassId cls, double z) {
  const bool ok = cls == ClassId::C3 ? (z >= 0.0 && z < 1.0) : (z > -1.0 && z < 1.0);
  if (!ok) throw std::domain_error("extremal function: z outside the supported real segment");
}

}  // namespace

double extremal_coeff(ClassId cls, int n) {
  if (n < 1) throw std::domain_error("extremal_coeff: n must be >= 1");
  const double nd = n;
  switch (cls) {
    case ClassId::C1: return (n % 2 == 1 ? 1.0 : -1.0) * (2.0 - 1.0 / nd);
    case ClassId::C2: return 1.0;
    case ClassId::C3: return 2.0 / 3.0 + 1.0 / (3.0 * nd * nd);
  }
  return 0.0;
}

Enclosure extremal_value(ClassId cls, double z) {
  require_extremal_domain(cls, z);
  switch (cls) {
    case ClassId::C1: {
      return 2.0 * z / (Enclosure(1.0) + z) - log1p(z);
    }
    case ClassId::C2: return z / (Enclosure(1.0) - z);
    case ClassId::C3: return 2.0 * z / (3.0 * (Enclosure(1.0) - z)) + li2(z) / 3.0;
  }
  return {};
}

Enclosure extremal_derivative(ClassId cls, double z) {
  require_extremal_domain(cls, z);
  switch (cls) {
    case ClassId::C1: return (Enclosure(1.0) - z) / sqr(Enclosure(1.0) + z);
    case ClassId::C2: return 1.0 / sqr(Enclosure(1.0) - z);
    case ClassId::C3: {
      const Enclosure log_ratio = (z == 0.0) ? Enclosure(1.0) : -log1m(z) / z;
      return 2.0 / (3.0 * sqr(Enclosure(1.0) - z)) + log_ratio / 3.0;
    }
  }
  return {};
}

double sharpness_point(ClassId cls, double r) { return cls == ClassId::C1 ? -r : r; }

Enclosure extremal_lhs_at(const ProblemSpec& spec, double z) {
  return extremal_lhs_at(spec, z, spec.tol / 8.0);
}

Enclosure extremal_lhs_at(const ProblemSpec& spec, double z, double series_tol) {
  spec.functional.validate();
  const ClassId cls = spec.cls;
  const Functional& fn = spec.functional;
  const double r = std::fabs(z);
  switch (fn.kind) {
    case FunctionalKind::F1:
      return abs(extremal_value(cls, z)) + abs(extremal_derivative(cls, z)) * r +
             extremal_series(cls, 1.0, 2, r, series_tol);
    case FunctionalKind::F2:
      return r + extremal_series(cls, 1.0, 2, r, series_tol) +
             extremal_series(cls, fn.p, 2, r, series_tol);
    case FunctionalKind::F3:
      return abs(extremal_value(cls, z)) + extremal_series(cls, 1.0, fn.N, r, series_tol);
    case FunctionalKind::F4:
      return sqr(extremal_value(cls, z)) + extremal_series(cls, 1.0, fn.N, r, series_tol);
  }
  return {};
}

Enclosure extremal_lhs(const ProblemSpec& spec, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("extremal_lhs: r must lie in [0, 1)");
  return extremal_lhs_at(spec, sharpness_point(spec.cls, r));
}

SharpnessReport verify_sharpness(const ProblemSpec& spec, const RadiusResult& result, double tol) {
  SharpnessReport report;
  report.theorem = spec.theorem();
  report.radius = result.radius;
  report.lhs_at_extremal = extremal_lhs(spec, result.radius);
  report.target_d_star = boundary_distance(spec.cls);
  report.gap = std::fabs(report.lhs_at_extremal.mid() - report.target_d_star);
  report.pass = report.gap <= tol && report.lhs_at_extremal.inflated(tol).contains(report.target_d_star);
  return report;
}

}  // namespace bohr
