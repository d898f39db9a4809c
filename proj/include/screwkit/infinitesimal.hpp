#pragma once

#include "screwkit/rotation.hpp"

#include <span>

namespace screwkit {

/// Force `f` applied at point `at`.
struct PointForce {
    Vec3 at;
    Vec3 f;
};

/// First-order field of a small rotation about `line`: omega = theta dir,
/// delta = theta dir x (-point), so points of the line stay put.
Twist twist_of_rotation(const AxisLine& line, double theta_small);

/// Componentwise sum. Each component is folded left to right over its values
/// in ascending order, so the result does not depend on the order of `ts`.
Twist compose_twists(std::span<const Twist> ts);

/// |sum delta| <= tol and |sum omega| <= tol.
bool twist_equilibrium(std::span<const Twist> ts, double tol);

/// theta D sin(nu) for a small rotation about `rot_line` seen along the target
/// line: the first-order displacement of `target_point` projected on
/// `target_dir`, i.e. theta (dir x (target_point - point)) . target_dir.
/// The sign follows the right-handed triple (dir, common perpendicular, target_dir).
double rotation_moment(const AxisLine& rot_line, double theta, const UnitVec3& target_dir,
                       const Vec3& target_point);

/// Centre of parallel small rotations: sum theta_i X_i / sum theta_i, taken
/// over the points of each line closest to the origin. Throws
/// CoupleDegenerate when |sum theta| <= tol and InvalidArgument when the lines
/// are not parallel or the sequences differ in length.
Vec3 parallel_rotation_center(std::span<const AxisLine> lines, std::span<const double> thetas,
                              double tol = 1e-12);

/// sum f_i . (delta + omega x r_i)
double virtual_work(std::span<const PointForce> forces, const Twist& tw);

/// Net force and net moment about the origin both vanish (max component <= tol).
bool force_equilibrium(std::span<const PointForce> forces, double tol);

}  // namespace screwkit
