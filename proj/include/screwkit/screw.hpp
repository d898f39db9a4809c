#pragma once

#include "screwkit/rotation.hpp"
#include "screwkit/screw_types.hpp"

namespace screwkit {

/// Central axis of a displacement. The axis passes through
///
///   r0 = (1/2) delta - delta x q / q^2
///
/// and is stored by its foot U = r0 - q^ (r0 . q^); the slide is delta . q^.
Screw screw_from_displacement(const Displacement& d);

/// Rotation about the central axis followed by the slide. The origin image is
/// delta = t + U - R U. Throws GibbsOverflow for theta = pi.
Displacement displacement_from_screw(const Screw& s);

struct AbsoluteTranslation {
    double value{0.0};
    bool translation_only{false};  ///< q = 0: value is |delta|
};

/// delta . q^, the same projection for every body point. For a pure
/// translation returns |delta| flagged translation_only; the identity throws
/// NoAxisDirection.
AbsoluteTranslation absolute_translation(const Displacement& d);

/// Composition of two finite rotations about arbitrary lines (first, then
/// second). Valid for every angle, including half-turns.
Screw compose_rotations(const Rotation& first, const Rotation& second);

struct ConjugatePair {
    Rotation line_a;
    Rotation line_b;
    /// Zero slide: line_a is the screw's rotation, line_b the null rotation.
    bool degenerate{false};
};

/// Two rotations about skew axes whose composition (line_a then line_b) is `s`.
/// The slide is realised as a couple (translation_as_couple with thetaB, psi)
/// whose first axis meets the central axis at U; that axis is then merged with
/// the central rotation. Throws InvalidArgument unless `s` is General.
ConjugatePair conjugate_pair_decompose(const Screw& s, double theta_b, double psi);

struct InvariantSides {
    double lhs;  ///< D sin(nu) sin(thetaA/2) sin(thetaB/2)
    double rhs;  ///< (1/2) |T| sin(thetaC/2)
};

/// Both sides of the tetrahedral invariant for a pair of rotations. Throws
/// DegenerateResultant when the pair composes to the identity.
InvariantSides conjugate_invariant(const Rotation& line_a, const Rotation& line_b);

/// Axis through the origin (assumed fixed) carrying A to A' and B to B'.
/// Direction from the normals of the two bisecting planes, (A'-A) x (B'-B);
/// when the chords are parallel, the line common to planes OAB and OA'B'.
/// Oriented so that the rotation angle lies in (0, pi]. Throws DegenerateInput
/// for collinear, non-rigid or identity data.
AxisLine euler_fixed_axis(const Correspondence& a, const Correspondence& b);

/// The axis of euler_fixed_axis together with its rotation angle.
Rotation euler_fixed_rotation(const Correspondence& a, const Correspondence& b);

/// Central axis with known direction from two correspondences: the planes
/// through each chord midpoint, normal to the chord's component across `dir`,
/// meet on the axis. When those planes coincide the axis is found from the
/// isosceles triangle over one chord instead. Throws ParallelPlanes when both
/// chords are parallel to `dir` or the data carries no rotation.
AxisLine levy_central_axis(const Correspondence& a, const Correspondence& b, const UnitVec3& dir);

/// Angle between a line and its image under a rotation theta, for a line at
/// angle phi to the rotation axis: sin(nu/2) = sin(theta/2) sin(phi).
double displaced_line_angle(double theta, double phi);

}  // namespace screwkit
