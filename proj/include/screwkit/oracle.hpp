#pragma once

#include "screwkit/rotation.hpp"
#include "screwkit/screw_types.hpp"

#include <span>

namespace screwkit::oracle {

/// r -> R r + d.
struct HomTransform {
    RotationMatrix R;
    Vec3 d;

    Vec3 apply(const Vec3& r) const { return R * r + d; }
};

/// Evaluated through the unit quaternion (1, q/2) / sqrt(1 + q^2/4).
HomTransform hom_from_displacement(const Displacement& d);

/// Quaternion extraction (largest-pivot branch). Throws TraceSingular when
/// 1 + trace(R) <= 1e-9.
Displacement displacement_from_hom(const HomTransform& h);

/// Rotation about an arbitrary line, built from an Eigen angle-axis (valid at pi).
HomTransform hom_from_rotation(const Rotation& rot);

/// Pure translation.
HomTransform hom_from_translation(const Vec3& t);

/// h1 first, then h2.
HomTransform hom_compose(const HomTransform& h1, const HomTransform& h2);

/// Screw by linear algebra: axis from the null space of R - I, angle from the
/// trace and the skew part, axis point as the minimum-norm solution of
/// (R - I) p = -(d - (d . axis) axis).
Screw screw_from_hom_bruteforce(const HomTransform& h);

/// Least-squares rigid fit (SVD of the cross-covariance), proper rotations only.
/// With exact data on three or more non-collinear points it reproduces the
/// unique motion.
HomTransform kabsch_fit(std::span<const Correspondence> corrs);

}  // namespace screwkit::oracle
