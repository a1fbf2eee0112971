#pragma once

#include <stdexcept>
#include <string>

#include "bohr/enclosure.hpp"
#include "bohr/functionals.hpp"

namespace bohr {

/// Certified bracket around the unique root of Φ in (0, 1).
struct RadiusResult {
  TheoremId theorem;
  double radius = 0.0;  // bracket midpoint
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  Enclosure residual;  // Φ(radius)
  int iterations = 0;

  [[nodiscard]] double bracket_width() const { return bracket_hi - bracket_lo; }
};

class SolverError : public std::runtime_error {
 public:
  enum class Kind { NoSignChange, AmbiguousSign, MaxIterations };

  SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr double kInitialBracketHi = 0.9;
inline constexpr double kEscalatedBracketHi = 1.0 - 1e-9;
inline constexpr int kMaxBisections = 200;
inline constexpr int kMaxSeriesRefinements = 4;

/// Bisection on certified signs of Φ, starting from [0, 0.9].
///
/// Each midpoint sign comes from an enclosure of Φ; if the enclosure
/// straddles zero the series tolerance is halved up to four times. A
/// straddle no wider than spec.tol is treated as a zero of Φ and the midpoint
/// becomes the new lower end. Terminates once the bracket is no wider than
/// 2·spec.tol. Deterministic.
RadiusResult solve_radius(const ProblemSpec& spec);

}  // namespace bohr
