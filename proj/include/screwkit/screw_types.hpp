#pragma once

#include "screwkit/core.hpp"

#include <variant>

namespace screwkit {

struct ScrewIdentity {};

struct ScrewTranslation {
    Vec3 t;
};

/// Rotation `theta` about the central axis, then a slide `slide` along axis.dir.
///
/// axis.point is the foot of the perpendicular from the origin (axis.point . axis.dir = 0),
/// theta is in (0, pi]; at pi the direction follows canonicalize_rotation's tie-break.
struct ScrewGeneral {
    AxisLine axis;
    double theta{0.0};
    double slide{0.0};
};

using Screw = std::variant<ScrewIdentity, ScrewTranslation, ScrewGeneral>;

/// Builds the canonical General screw (or the Identity / PureTranslation
/// variant when theta vanishes) from a rotation `theta` about `dir` and the
/// image `origin_image` of the coordinate origin.
///
/// The central axis passes through r0 = delta/2 + (1/2) cot(theta/2) dir x delta,
/// which is finite for every theta in (0, pi].
Screw screw_from_axis_angle_origin(const UnitVec3& dir, double theta, const Vec3& origin_image);

/// Action of a screw on a point (valid for every variant, including theta = pi).
Vec3 apply_screw(const Screw& s, const Vec3& r);

/// The rotation-plus-slide line of a general screw.
inline Rotation rotation_of(const ScrewGeneral& s) { return {s.axis, s.theta}; }

}  // namespace screwkit
