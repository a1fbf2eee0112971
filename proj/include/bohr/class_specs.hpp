#pragma once

// Numeric descriptions of the classes C1, C2, C3: coefficient bounds,
// growth and distortion envelopes, and the boundary distance d* that forms
// the right-hand side of every Bohr-type inequality.

#include "bohr/class_id.hpp"
#include "bohr/enclosure.hpp"

namespace bohr {

/// Upper bound on |f(z)| over |z| <= r, for r in [0, 1).
///   C1: 2r/(1-r) + log(1-r)
///   C2: r/(1-r)
///   C3: 2r/(3(1-r)) + Li2(r)/3
Enclosure growth_upper(ClassId cls, double r);

/// Lower bound on |f(z)| over |z| = r, for r in [0, 1]. Only used to check
/// that d* is its r -> 1 limit.
Enclosure growth_lower(ClassId cls, double r);

/// Upper bound on |f'(z)| over |z| <= r, for r in [0, 1). The C3 term
/// -log(1-r)/(3r) takes its limit 1/3 at r = 0.
Enclosure distortion_upper(ClassId cls, double r);

/// d*: 1 - log 2 (C1), 1/2 (C2), 1/3 + π²/36 (C3).
double boundary_distance(ClassId cls);

/// d* as a tight enclosure, for use inside certified expressions.
Enclosure boundary_distance_enclosure(ClassId cls);

/// Value handle bundling the class envelopes.
struct ClassSpec {
  ClassId id;

  [[nodiscard]] double coeff_bound(int n) const { return bohr::coeff_bound(id, n); }
  [[nodiscard]] Enclosure growth_upper(double r) const { return bohr::growth_upper(id, r); }
  [[nodiscard]] Enclosure growth_lower(double r) const { return bohr::growth_lower(id, r); }
  [[nodiscard]] Enclosure distortion_upper(double r) const { return bohr::distortion_upper(id, r); }
  [[nodiscard]] double boundary_distance() const { return bohr::boundary_distance(id); }
};

}  // namespace bohr
