#pragma once

// The four Bohr-type left-hand sides, their class-wide majorants M(r), the
// normalized objective Φ(r) = M(r) - d*, and the published single-expression
// residuals used as an independent cross-check.
//
//   F1: |f(z)| + |f'(z)||z| + Σ_{n>=2} |a_n z^n|
//   F2: |z| + Σ_{n>=2} |a_n z^n| + Σ_{n>=2} |a_n|^p |z|^{np}     (p >= 1)
//   F3: |f(z)| + Σ_{n>=N} |a_n z^n|                             (N >= 2)
//   F4: |f(z)|^2 + Σ_{n>=N} |a_n z^n|                           (N >= 2)

#include <optional>
#include <string>
#include <string_view>

#include "bohr/class_id.hpp"
#include "bohr/enclosure.hpp"

namespace bohr {

enum class FunctionalKind { F1, F2, F3, F4 };

std::string to_string(FunctionalKind kind);
FunctionalKind parse_functional(std::string_view token);

/// A functional together with its parameter: p for F2, N for F3/F4.
struct Functional {
  FunctionalKind kind = FunctionalKind::F1;
  double p = 1.0;
  int N = 2;

  static Functional f1() { return {FunctionalKind::F1, 1.0, 2}; }
  static Functional f2(double p) { return {FunctionalKind::F2, p, 2}; }
  static Functional f3(int N) { return {FunctionalKind::F3, 1.0, N}; }
  static Functional f4(int N) { return {FunctionalKind::F4, 1.0, N}; }

  [[nodiscard]] bool uses_p() const { return kind == FunctionalKind::F2; }
  [[nodiscard]] bool uses_N() const { return kind == FunctionalKind::F3 || kind == FunctionalKind::F4; }

  /// Throws std::invalid_argument when p < 1 (F2) or N < 2 (F3, F4).
  void validate() const;
};

/// One of the twelve theorems, tokenized as "t2.1" ... "t4.4". The section
/// selects the class (2 -> C1, 3 -> C2, 4 -> C3), the index the functional.
struct TheoremId {
  int section = 2;
  int index = 1;

  [[nodiscard]] std::string token() const;
  [[nodiscard]] ClassId class_id() const;
  [[nodiscard]] FunctionalKind functional() const;

  static TheoremId parse(std::string_view token);
  static TheoremId of(ClassId cls, FunctionalKind kind);

  friend bool operator==(const TheoremId&, const TheoremId&) = default;
};

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr double kMinSolverTol = 1e-14;
inline constexpr double kMaxSolverTol = 1e-3;

struct ProblemSpec {
  ClassId cls = ClassId::C1;
  Functional functional;
  double tol = kDefaultSolverTol;
  /// Right-hand side override; defaults to boundary_distance(cls).
  std::optional<double> target;

  [[nodiscard]] TheoremId theorem() const { return TheoremId::of(cls, functional.kind); }
  [[nodiscard]] Enclosure rhs() const;
  void validate() const;

  /// Builds the problem for a theorem; p/N are required exactly when the
  /// theorem's functional takes them.
  static ProblemSpec for_theorem(TheoremId id, std::optional<double> p = std::nullopt,
                                 std::optional<int> N = std::nullopt, double tol = kDefaultSolverTol);
};

/// Σ_{n>=N} c_n r^n in closed form:
///   C1: 2r^N/(1-r) - Σ_{n>=N} r^n/n
///   C2: r^N/(1-r)
///   C3: (2/3) r^N/(1-r) + (Li2(r) - Σ_{n<N} r^n/n^2)/3
Enclosure coefficient_tail(ClassId cls, int N, double r);

/// Worst-case left-hand side over the class at radius r.
Enclosure majorant(const ProblemSpec& spec, double r);
Enclosure majorant(const ProblemSpec& spec, double r, double series_tol);

/// Φ(r) = M(r) - d*. Φ(0) = -d*, Φ increasing.
Enclosure phi(const ProblemSpec& spec, double r);
Enclosure phi(const ProblemSpec& spec, double r, double series_tol);

/// The published residual of the theorem matching `spec`, with its printed
/// sign convention. Infinite sums in the printed forms are summed directly.
Enclosure paper_residual(const ProblemSpec& spec, double r);
Enclosure paper_residual(const ProblemSpec& spec, double r, double series_tol);
/// Parameter-free theorems only (t2.1, t3.1, t4.1).
Enclosure paper_residual(TheoremId id, double r);

/// paper_residual(r) = sign * weight(r) * Φ(r), weight > 0 on [0, 1).
struct ResidualScale {
  int sign = 1;
  Enclosure weight{1.0};
};
ResidualScale residual_scale(const ProblemSpec& spec, double r);

}  // namespace bohr
