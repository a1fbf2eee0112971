#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"

namespace bohr {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  /// Per-class right-hand-side overrides, indexed by index_of(ClassId). Used
  /// for fault injection: the checks still compare against the true values.
  std::array<std::optional<double>, 3> target_override{};
  int max_N = 10;
  double tol = kDefaultSolverTol;
};

/// The twelve theorems with F2 at p in {2, 5} and F3/F4 at N in {2, 3, 5}.
std::vector<ProblemSpec> standard_configurations(double tol = kDefaultSolverTol);

/// Describes a configuration as "t2.3 N=5" etc.
std::string describe(const ProblemSpec& spec);

/// Runs the full check suite: published radii and tables, polynomial
/// cross-checks, limits, sharpness, monotonicity, class ordering, residual
/// form equivalence and special-function identities.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace bohr
