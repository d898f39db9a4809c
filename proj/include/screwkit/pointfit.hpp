#pragma once

#include "screwkit/rotation.hpp"

#include <optional>
#include <span>

namespace screwkit {

/// Proper rigid displacement carrying three non-collinear points to their
/// images. Orthonormal frames are built on the triangle in both poses; the
/// frame map goes through gibbs_from_matrix, and the result is cross-checked
/// against the midpoint elimination fit (fit_displacement_elimination).
///
/// Throws CollinearPoints when the triangle area is below 1e-9 scale^2 and
/// NonRigidData when a side length changes by more than 1e-6 scale, with
/// scale the largest before-distance. A half-turn fit throws TraceSingular.
Displacement fit_displacement(const Correspondence& c0, const Correspondence& c1,
                              const Correspondence& c2);

/// Fit by eliminating the chord midpoints: with a_i = w_i - w_0 and
/// b_i = D_i - D_0 (midpoints w, chords D), b_i = q x a_i gives
///
///   q = (sum |a_i|^2 I - a_i a_i^T)^-1 sum a_i x b_i
///
/// and Gamma = D_0 - q x w_0. Same preconditions as fit_displacement.
Displacement fit_displacement_elimination(const Correspondence& c0, const Correspondence& c1,
                                          const Correspondence& c2);

struct RigidityReport {
    bool rigid{false};
    /// Sign of the tetrahedral volume of the first four points is kept.
    /// Empty when those points are coplanar.
    std::optional<bool> proper;
};

/// Pairwise distances preserved within rel 1e-6 of the largest distance.
/// Throws TooFewPoints for fewer than four correspondences.
RigidityReport check_rigidity(std::span<const Correspondence> corrs);

}  // namespace screwkit
