#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr {

/// The three nested close-to-convex subclasses, C3 ⊂ C2 ⊂ C1.
enum class ClassId { C1, C2, C3 };

inline constexpr std::array<ClassId, 3> kAllClasses{ClassId::C1, ClassId::C2, ClassId::C3};

inline constexpr std::size_t index_of(ClassId c) { return static_cast<std::size_t>(c); }

inline std::string to_string(ClassId c) {
  switch (c) {
    case ClassId::C1: return "c1";
    case ClassId::C2: return "c2";
    case ClassId::C3: return "c3";
  }
  return "?";
}

inline ClassId parse_class(std::string_view token) {
  if (token == "c1" || token == "C1") return ClassId::C1;
  if (token == "c2" || token == "C2") return ClassId::C2;
  if (token == "c3" || token == "C3") return ClassId::C3;
  throw std::invalid_argument("unknown class '" + std::string(token) + "' (expected c1, c2 or c3)");
}

namespace detail {

// Coefficient bound in long double; the series kernels budget for its
// rounding at extended precision.
inline long double coeff_bound_ld(ClassId c, long double n) {
  switch (c) {
    case ClassId::C1: return 2.0L - 1.0L / n;
    case ClassId::C2: return 1.0L;
    case ClassId::C3: return 2.0L / 3.0L + 1.0L / (3.0L * n * n);
  }
  return 0.0L;
}

}  // namespace detail

/// Sharp bound on |a_n| for n >= 2: 2 - 1/n, 1, or 2/3 + 1/(3n^2).
inline double coeff_bound(ClassId c, int n) {
  if (n < 2) throw std::domain_error("coeff_bound: n must be >= 2");
  const double nd = n;
  switch (c) {
    case ClassId::C1: return 2.0 - 1.0 / nd;
    case ClassId::C2: return 1.0;
    case ClassId::C3: return 2.0 / 3.0 + 1.0 / (3.0 * nd * nd);
  }
  return 0.0;
}

/// sup_{n >= 2} c_n, the constant used in tail bounds.
inline constexpr double coeff_bound_sup(ClassId c) {
  switch (c) {
    case ClassId::C1: return 2.0;
    case ClassId::C2: return 1.0;
    case ClassId::C3: return 0.75;
  }
  return 0.0;
}

}  // namespace bohr
