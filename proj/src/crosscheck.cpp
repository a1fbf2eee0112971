#include "bohr/crosscheck.hpp"

#include <stdexcept>

namespace bohr {

namespace {

long double horner(const std::vector<long double>& coeffs, long double x) {
  long double acc = 0.0L;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool opposite_signs(long double a, long double b) { return (a < 0.0L) != (b < 0.0L); }

}  // namespace

std::vector<long double> crosscheck_polynomial(TheoremId id, int N) {
  if (id.section != 3 || id.index == 2) {
    throw std::invalid_argument("polynomial crosscheck exists only for t3.1, t3.3, t3.4");
  }
  if (id.index != 1 && N < 2) throw std::invalid_argument("polynomial crosscheck requires N >= 2");
  switch (id.index) {
    case 1: return {1.0L, -6.0L, 1.0L, 2.0L};
    case 3: {
      std::vector<long double> c(static_cast<std::size_t>(N) + 1, 0.0L);
      c[0] = -1.0L;
      c[1] += 3.0L;
      c[static_cast<std::size_t>(N)] += 2.0L;
      return c;
    }
    default: {
      std::vector<long double> c(static_cast<std::size_t>(N) + 2, 0.0L);
      c[0] = 1.0L;
      c[1] += -2.0L;
      c[2] += -1.0L;
      c[static_cast<std::size_t>(N)] += -2.0L;
      c[static_cast<std::size_t>(N) + 1] += 2.0L;
      return c;
    }
  }
}

double solve_polynomial_crosscheck(TheoremId id, int N) {
  const auto coeffs = crosscheck_polynomial(id, N);

  constexpr long double kStep = 1e-6L;
  long double a = 0.0L;
  long double fa = horner(coeffs, a);
  long double b = 0.0L;
  bool found = false;
  for (long k = 1; k <= 1'000'000; ++k) {
    b = static_cast<long double>(k) * kStep;
    const long double fb = horner(coeffs, b);
    if (fb == 0.0L) return static_cast<double>(b);
    if (opposite_signs(fa, fb)) {
      found = true;
      break;
    }
    a = b;
    fa = fb;
  }
  if (!found) throw std::runtime_error("polynomial crosscheck: no sign change in (0, 1)");

  for (int k = 0; k < 200 && b - a > 0.0L; ++k) {
    const long double m = a + 0.5L * (b - a);
    if (m <= a || m >= b) break;
    const long double fm = horner(coeffs, m);
    if (fm == 0.0L) return static_cast<double>(m);
    if (opposite_signs(fa, fm)) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return static_cast<double>(a + 0.5L * (b - a));
}

}  // namespace bohr
