#include "bohr/functionals.hpp"

#include <cmath>
#include <cstdint>

#include "bohr/class_specs.hpp"
#include "bohr/special_fn.hpp"

namespace bohr {

namespace {

void require_open_unit(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("functional: r must lie in [0, 1)");
}

// Σ_{n>=N} r^n / (3n^2), summed directly (used only by the printed forms).
Enclosure third_inverse_square_tail(int N, double r, double tol) {
  auto w = [](std::int64_t n) {
    const auto nn = static_cast<long double>(n);
    return 1.0L / (3.0L * nn * nn);
  };
  return weighted_power_series(w, w, 1.0, N, r, tol);
}

// Printed residuals, one per theorem, transcribed as published.
Enclosure residual_c1(const ProblemSpec& spec, double r, double tol) {
  const Enclosure R(r);
  const Enclosure one_minus = Enclosure(1.0) - r;
  const Enclosure l2 = log_two();
  const Enclosure log_1mr = log1m(r);
  switch (spec.functional.kind) {
    case FunctionalKind::F1:
      // log2 - 1 - r(-6 + r(2 + r - log2) + log4) + 2(1-r)^2 log(1-r)
      return l2 - 1.0 - R * (-6.0 + R * (2.0 + R - l2) + 2.0 * l2) + 2.0 * sqr(one_minus) * log_1mr;
    case FunctionalKind::F2: {
      // Σ(2-1/n)^p r^{pn} - (1 - 3r + r log2 - log(2-2r) + r log(1-r)) / (1-r)
      const Enclosure bracket =
          1.0 - 3.0 * R + R * l2 - log(Enclosure(2.0) - 2.0 * r) + R * log_1mr;
      return power_sum(ClassId::C1, spec.functional.p, 2, r, tol) - bracket / one_minus;
    }
    case FunctionalKind::F3:
      // 2r/(1-r) + log(1-r) + Σ_{n>=N}(2-1/n) r^n - (1 - log2)
      return 2.0 * r / one_minus + log_1mr + power_sum(ClassId::C1, 1.0, spec.functional.N, r, tol) -
             (1.0 - l2);
    case FunctionalKind::F4:
      // (2r/(1-r) + log(1-r))^2 + Σ_{n>=N}(2-1/n) r^n - (1 - log2)
      return sqr(2.0 * r / one_minus + log_1mr) +
             power_sum(ClassId::C1, 1.0, spec.functional.N, r, tol) - (1.0 - l2);
  }
  return {};
}

Enclosure residual_c2(const ProblemSpec& spec, double r) {
  const Enclosure R(r);
  switch (spec.functional.kind) {
    case FunctionalKind::F1:
      // 1 - 6r + r^2 + 2r^3
      return 1.0 - 6.0 * R + R * R + 2.0 * R * R * R;
    case FunctionalKind::F2: {
      // 1 - 3r - r^p - 2r^{2p} + 3r^{1+p} + 2r^{1+2p}
      const double p = spec.functional.p;
      const Enclosure rp = pow(r, p);
      const Enclosure r2p = pow(r, 2.0 * p);
      return 1.0 - 3.0 * R - rp - 2.0 * r2p + 3.0 * (R * rp) + 2.0 * (R * r2p);
    }
    case FunctionalKind::F3:
      // 3r + 2r^N - 1
      return 3.0 * R + 2.0 * pow(r, spec.functional.N) - 1.0;
    case FunctionalKind::F4: {
      // 1 - 2r - r^2 - 2r^N + 2r^{1+N}
      const Enclosure rN = pow(r, spec.functional.N);
      return 1.0 - 2.0 * R - R * R - 2.0 * rN + 2.0 * (R * rN);
    }
  }
  return {};
}

Enclosure residual_c3(const ProblemSpec& spec, double r, double tol) {
  const Enclosure R(r);
  const Enclosure one_minus = Enclosure(1.0) - r;
  const Enclosure pi2 = pi_squared();
  // -(1/3) ∫_0^r log(1-t)/t dt = Li2(r)/3
  const Enclosure integral_term = li2(r) / 3.0;
  const Enclosure d_star = 1.0 / Enclosure(3.0) + pi2 / 36.0;
  switch (spec.functional.kind) {
    case FunctionalKind::F1:
      // 2(2-r^2)r/(3(1-r)^2) - (1/3)∫ - (1/3)log(1-r) + Σ_{n>=2} r^n/(3n^2) - (1/3 + π²/36)
      return 2.0 * (2.0 - R * R) * R / (3.0 * sqr(one_minus)) + integral_term - log1m(r) / 3.0 +
             third_inverse_square_tail(2, r, tol) - d_star;
    case FunctionalKind::F2:
      // (3-r)r/(3(1-r)) + Σ r^n/(3n^2) + Σ(2/3 + 1/(3n^2))^p r^{np} - (12+π²)/36
      return (3.0 - R) * R / (3.0 * one_minus) + third_inverse_square_tail(2, r, tol) +
             power_sum(ClassId::C3, spec.functional.p, 2, r, tol) - (12.0 + pi2) / 36.0;
    case FunctionalKind::F3: {
      // Σ_{n>=N} r^n/(3n^2) - (1/3)∫ - (12 + π² - 36r - π²r - 24r^N)/(36(1-r))
      const int N = spec.functional.N;
      return third_inverse_square_tail(N, r, tol) + integral_term -
             (12.0 + pi2 - 36.0 * R - pi2 * R - 24.0 * pow(r, N)) / (36.0 * one_minus);
    }
    case FunctionalKind::F4: {
      // (2r/(3(1-r)) - (1/3)∫)^2 + Σ_{n>=N} r^n/(3n^2) + (24r^N + (12+π²)r - 12 - π²)/(36(1-r))
      const int N = spec.functional.N;
      return sqr(2.0 * r / (3.0 * one_minus) + integral_term) + third_inverse_square_tail(N, r, tol) +
             (24.0 * pow(r, N) + (12.0 + pi2) * R - 12.0 - pi2) / (36.0 * one_minus);
    }
  }
  return {};
}

}  // namespace

std::string to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::F1: return "f1";
    case FunctionalKind::F2: return "f2";
    case FunctionalKind::F3: return "f3";
    case FunctionalKind::F4: return "f4";
  }
  return "?";
}

FunctionalKind parse_functional(std::string_view token) {
  if (token == "f1" || token == "F1") return FunctionalKind::F1;
  if (token == "f2" || token == "F2") return FunctionalKind::F2;
  if (token == "f3" || token == "F3") return FunctionalKind::F3;
  if (token == "f4" || token == "F4") return FunctionalKind::F4;
  throw std::invalid_argument("unknown functional '" + std::string(token) + "' (expected f1..f4)");
}

void Functional::validate() const {
  if (kind == FunctionalKind::F2 && !(p >= 1.0 && std::isfinite(p))) {
    throw std::invalid_argument("functional f2 requires a finite p >= 1");
  }
  if (uses_N() && N < 2) throw std::invalid_argument("functionals f3/f4 require N >= 2");
}

std::string TheoremId::token() const {
  return "t" + std::to_string(section) + "." + std::to_string(index);
}

ClassId TheoremId::class_id() const { return kAllClasses.at(static_cast<std::size_t>(section - 2)); }

FunctionalKind TheoremId::functional() const { return static_cast<FunctionalKind>(index - 1); }

TheoremId TheoremId::parse(std::string_view token) {
  if (token.size() == 4 && (token[0] == 't' || token[0] == 'T') && token[2] == '.' &&
      token[1] >= '2' && token[1] <= '4' && token[3] >= '1' && token[3] <= '4') {
    return {token[1] - '0', token[3] - '0'};
  }
  throw std::invalid_argument("unknown theorem '" + std::string(token) + "' (expected t2.1 .. t4.4)");
}

TheoremId TheoremId::of(ClassId cls, FunctionalKind kind) {
  return {static_cast<int>(index_of(cls)) + 2, static_cast<int>(kind) + 1};
}

Enclosure ProblemSpec::rhs() const {
  if (target) return {*target, *target};
  return boundary_distance_enclosure(cls);
}

void ProblemSpec::validate() const {
  functional.validate();
  if (!(tol >= kMinSolverTol && tol <= kMaxSolverTol)) {
    throw std::invalid_argument("tol must lie in [1e-14, 1e-3]");
  }
  if (target && !(*target > 0.0 && std::isfinite(*target))) {
    throw std::invalid_argument("target must be positive and finite");
  }
}

ProblemSpec ProblemSpec::for_theorem(TheoremId id, std::optional<double> p, std::optional<int> N,
                                     double tol) {
  ProblemSpec spec;
  spec.cls = id.class_id();
  spec.tol = tol;
  switch (id.functional()) {
    case FunctionalKind::F1:
      if (p || N) throw std::invalid_argument(id.token() + " takes no parameters");
      spec.functional = Functional::f1();
      break;
    case FunctionalKind::F2:
      if (!p) throw std::invalid_argument(id.token() + " requires p");
      if (N) throw std::invalid_argument(id.token() + " takes no N");
      spec.functional = Functional::f2(*p);
      break;
    case FunctionalKind::F3:
    case FunctionalKind::F4:
      if (!N) throw std::invalid_argument(id.token() + " requires N");
      if (p) throw std::invalid_argument(id.token() + " takes no p");
      spec.functional = id.functional() == FunctionalKind::F3 ? Functional::f3(*N) : Functional::f4(*N);
      break;
  }
  spec.validate();
  return spec;
}

Enclosure coefficient_tail(ClassId cls, int N, double r) {
  require_open_unit(r);
  if (N < 1) throw std::domain_error("coefficient_tail: N must be >= 1");
  const Enclosure one_minus = Enclosure(1.0) - r;
  const Enclosure geometric = pow(r, N) / one_minus;
  switch (cls) {
    case ClassId::C1: return 2.0 * geometric - tail_log_series(r, N);
    case ClassId::C2: return geometric;
    case ClassId::C3: return 2.0 * geometric / 3.0 + li2_tail(r, N) / 3.0;
  }
  return {};
}

Enclosure majorant(const ProblemSpec& spec, double r) { return majorant(spec, r, spec.tol / 8.0); }

Enclosure majorant(const ProblemSpec& spec, double r, double series_tol) {
  spec.functional.validate();
  require_open_unit(r);
  const ClassId cls = spec.cls;
  const Functional& fn = spec.functional;
  switch (fn.kind) {
    case FunctionalKind::F1:
      return growth_upper(cls, r) + r * distortion_upper(cls, r) + coefficient_tail(cls, 2, r);
    case FunctionalKind::F2:
      return r + coefficient_tail(cls, 2, r) + power_sum(cls, fn.p, 2, r, series_tol);
    case FunctionalKind::F3: return growth_upper(cls, r) + coefficient_tail(cls, fn.N, r);
    case FunctionalKind::F4: return sqr(growth_upper(cls, r)) + coefficient_tail(cls, fn.N, r);
  }
  return {};
}

Enclosure phi(const ProblemSpec& spec, double r) { return phi(spec, r, spec.tol / 8.0); }

Enclosure phi(const ProblemSpec& spec, double r, double series_tol) {
  return majorant(spec, r, series_tol) - spec.rhs();
}

Enclosure paper_residual(const ProblemSpec& spec, double r) {
  return paper_residual(spec, r, spec.tol / 8.0);
}

Enclosure paper_residual(const ProblemSpec& spec, double r, double series_tol) {
  spec.functional.validate();
  require_open_unit(r);
  switch (spec.cls) {
    case ClassId::C1: return residual_c1(spec, r, series_tol);
    case ClassId::C2: return residual_c2(spec, r);
    case ClassId::C3: return residual_c3(spec, r, series_tol);
  }
  return {};
}

Enclosure paper_residual(TheoremId id, double r) {
  return paper_residual(ProblemSpec::for_theorem(id), r);
}

ResidualScale residual_scale(const ProblemSpec& spec, double r) {
  require_open_unit(r);
  const Enclosure one_minus = Enclosure(1.0) - r;
  switch (spec.cls) {
    case ClassId::C1:
      if (spec.functional.kind == FunctionalKind::F1) return {+1, sqr(one_minus)};
      return {+1, Enclosure(1.0)};
    case ClassId::C2:
      switch (spec.functional.kind) {
        case FunctionalKind::F1: return {-1, 2.0 * sqr(one_minus)};
        case FunctionalKind::F2: return {-1, 2.0 * one_minus * (1.0 - pow(r, spec.functional.p))};
        case FunctionalKind::F3: return {+1, 2.0 * one_minus};
        case FunctionalKind::F4: return {-1, 2.0 * sqr(one_minus)};
      }
      break;
    case ClassId::C3: return {+1, Enclosure(1.0)};
  }
  return {};
}

}  // namespace bohr
