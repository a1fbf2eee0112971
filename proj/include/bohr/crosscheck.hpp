#pragma once

#include <vector>

#include "bohr/functionals.hpp"

namespace bohr {

/// Coefficients (constant term first) of the published polynomial for the
/// pure-polynomial theorems:
///   t3.1: 1 - 6r + r^2 + 2r^3
///   t3.3: 3r + 2r^N - 1
///   t3.4: 1 - 2r - r^2 - 2r^N + 2r^{N+1}
std::vector<long double> crosscheck_polynomial(TheoremId id, int N = 2);

/// Root in (0, 1) of the published polynomial, found independently of the
/// enclosure machinery: a sign scan with step 1e-6, then long-double
/// bisection on Horner evaluation. Intended as a reference in checks.
double solve_polynomial_crosscheck(TheoremId id, int N = 2);

}  // namespace bohr
