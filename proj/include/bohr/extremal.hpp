#pragma once

// Extremal functions of each class and the true left-hand sides they
// produce. The majorants are attained by these functions at the signed
// sharpness point, which is what makes each radius sharp:
//
//   C1: f(z) = 2z/(1+z) - log(1+z) = Σ (-1)^{n+1} (2 - 1/n) z^n,  at z = -r
//   C2: f(z) = z/(1-z)             = Σ z^n,                       at z = +r
//   C3: f(z) = 2z/(3(1-z)) + Li2(z)/3 = Σ (2/3 + 1/(3n^2)) z^n,   at z = +r

#include <string>

#include "bohr/class_id.hpp"
#include "bohr/enclosure.hpp"
#include "bohr/functionals.hpp"
#include "bohr/radius_solver.hpp"

namespace bohr {

inline constexpr double kDefaultSharpnessTol = 1e-9;

/// Signed Taylor coefficient a_n (n >= 1) of the class extremal function.
double extremal_coeff(ClassId cls, int n);

/// f(z) for real z: z in (-1, 1) for C1 and C2, z in [0, 1) for C3.
Enclosure extremal_value(ClassId cls, double z);

/// f'(z) on the same domain; the C3 term -log(1-z)/(3z) is 1/3 at z = 0.
Enclosure extremal_derivative(ClassId cls, double z);

/// The point where equality is attained: -r for C1, +r otherwise.
double sharpness_point(ClassId cls, double r);

/// The functional's left-hand side for the extremal function at real z.
Enclosure extremal_lhs_at(const ProblemSpec& spec, double z);
Enclosure extremal_lhs_at(const ProblemSpec& spec, double z, double series_tol);

/// extremal_lhs_at(spec, sharpness_point(spec.cls, r)).
Enclosure extremal_lhs(const ProblemSpec& spec, double r);

struct SharpnessReport {
  TheoremId theorem;
  double radius = 0.0;
  Enclosure lhs_at_extremal;
  double target_d_star = 0.0;
  double gap = 0.0;  // |mid(lhs) - d*|
  bool pass = false;
};

/// pass iff gap <= tol and d* lies in the lhs enclosure inflated by tol.
/// Always compares against the class's true d*, ignoring spec.target.
SharpnessReport verify_sharpness(const ProblemSpec& spec, const RadiusResult& result,
                                 double tol = kDefaultSharpnessTol);

}  // namespace bohr
