#include "bohr/radius_solver.hpp"

namespace bohr {

namespace {

// Φ at r, refining the series budget while the sign is undecided.
Enclosure decisive_phi(const ProblemSpec& spec, double r) {
  double series_tol = spec.tol / 8.0;
  Enclosure value = phi(spec, r, series_tol);
  for (int k = 0; k < kMaxSeriesRefinements && value.contains(0.0); ++k) {
    series_tol /= 2.0;
    value = phi(spec, r, series_tol);
  }
  return value;
}

}  // namespace

RadiusResult solve_radius(const ProblemSpec& spec) {
  spec.validate();

  double lo = 0.0;
  double hi = kInitialBracketHi;
  if (!decisive_phi(spec, hi).certainly_positive()) {
    hi = kEscalatedBracketHi;
    if (!decisive_phi(spec, hi).certainly_positive()) {
      throw SolverError(SolverError::Kind::NoSignChange,
                        spec.theorem().token() + ": objective is not positive near r = 1");
    }
  }

  int iterations = 0;
  while (hi - lo > 2.0 * spec.tol) {
    if (iterations == kMaxBisections) {
      throw SolverError(SolverError::Kind::MaxIterations,
                        spec.theorem().token() + ": bisection did not converge");
    }
    ++iterations;
    const double mid = lo + 0.5 * (hi - lo);
    const Enclosure value = decisive_phi(spec, mid);
    if (value.certainly_negative()) {
      lo = mid;
    } else if (value.certainly_positive()) {
      hi = mid;
    } else if (value.width() <= spec.tol) {
      lo = mid;
    } else {
      throw SolverError(SolverError::Kind::AmbiguousSign,
                        spec.theorem().token() + ": sign of objective undecided at r = " +
                            std::to_string(mid));
    }
  }

  RadiusResult result;
  result.theorem = spec.theorem();
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.radius = lo + 0.5 * (hi - lo);
  result.residual = phi(spec, result.radius);
  result.iterations = iterations;
  return result;
}

}  // namespace bohr
