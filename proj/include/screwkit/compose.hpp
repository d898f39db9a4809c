#pragma once

#include "screwkit/rotation.hpp"
#include "screwkit/screw_types.hpp"

#include <utility>

namespace screwkit {

/// Rotation +theta about (point1, dir) followed by -theta about (point2, dir).
struct Couple {
    UnitVec3 dir;
    Vec3 point1;
    Vec3 point2;
    double theta{0.0};
};

// =============================================================================
// Rotations about intersecting axes
// =============================================================================

/// Resultant of rotating `theta1` about `axis1` and then `theta2` about `axis2`,
/// both axes through a common point (q1 applied first):
///
///   s = (q1 + q2 + (1/2) q2 x q1) / (1 - (1/4) q1 . q2)
///
/// Throws ResultantHalfTurn when the denominator is within 1e-12 of zero; the
/// caller must then compose matrices instead.
GibbsVector compose_gibbs(const GibbsVector& q1, const GibbsVector& q2);

/// Half-angle form of the same composition, valid for every angle including pi:
///
///   cos(T/2)   = c1 c2 - s1 s2 (a1 . a2)
///   Q sin(T/2) = a1 s1 c2 + a2 s2 c1 + (a2 x a1) s1 s2
///
/// Returns the canonical (axis, angle) with angle in [0, pi]. For a null
/// resultant the axis is axis1.
std::pair<UnitVec3, double> compose_rotation_axes(const UnitVec3& axis1, double theta1,
                                                  const UnitVec3& axis2, double theta2);

struct ResultantTrig {
    double angle{0.0};  ///< Theta in [0, pi]
    Vec3 cosines;       ///< (cos G, cos H, cos L) of the resultant axis in the frame below
    double half_cos{1.0};  ///< cos(Theta/2) before canonicalization (may be negative)
    Vec3 half_sin_axis;    ///< Q sin(Theta/2) before canonicalization
};

/// Two rotations about intersecting axes, expressed in the frame where axis1 = x
/// and axis2 = (cos nu, sin nu, 0):
///
///   sin(T/2) cos G = s1 c2 + s2 c1 cos nu
///   sin(T/2) cos H = s2 c1 sin nu
///   sin(T/2) cos L = -s1 s2 sin nu      (right-handed sign)
ResultantTrig resultant_trig(double theta1, double theta2, double nu);

/// Resultant axes for both orders of the pair; they mirror each other in the
/// plane of the two given axes.
std::pair<UnitVec3, UnitVec3> order_swap_axis(double theta1, double theta2, double nu);

struct SineProportionality {
    double sin_g;         ///< sine of the angle between the resultant and axis1
    double sin_h_prime;   ///< sine of the angle between the resultant and axis2
};

/// sin^2 G = sin^2(theta2/2) sin^2 nu / sin^2(T/2), sin^2 H' = sin^2(theta1/2) sin^2 nu / sin^2(T/2).
/// Throws DegenerateResultant when the resultant angle vanishes.
SineProportionality sine_proportionality(double theta1, double theta2, double nu);

// =============================================================================
// General displacements
// =============================================================================

/// d1 first, then d2. Rotational parts compose through compose_gibbs with a
/// matrix fallback; a resultant half-turn throws ResultantHalfTurn.
Displacement compose_displacements(const Displacement& d1, const Displacement& d2);

struct NonintersectingResult {
    Screw screw;        ///< resultant screw, world frame
    Vec3 frame_delta;   ///< (alpha, beta, gamma): origin image in the canonical frame
    double slide{0.0};  ///< signed absolute translation T along the resultant axis
    double distance{0.0};  ///< u, shortest distance between the axes
    double nu{0.0};     ///< angle between the axis directions, [0, pi]
};

/// Composition of `first` then `second` about two non-intersecting axes, computed
/// in the canonical frame (axis1 = x through the origin, axis2 along
/// (cos nu, sin nu, 0) through (0, 0, u)):
///
///   alpha = -u sin nu sin theta2, beta = u cos nu sin theta2, gamma = 2u sin^2(theta2/2)
///   |T| = 2u sin nu sin(theta1/2) sin(theta2/2) / sin(Theta/2)
///
/// Throws IntersectingAxes when u < tol.abs, DegenerateResultant when the
/// composition is the identity.
NonintersectingResult nonintersecting_pair(const Rotation& first, const Rotation& second,
                                           const Tolerance& tol = {});

struct ThreeAxisResultant {
    double angle;   ///< Theta in [0, pi]
    double sin2_g;
    double sin2_h;  ///< printed form, half-angle cross term
    double sin2_l;
    double sin2_h_exact;  ///< full-angle cross term; agrees with the matrix composition
};

/// Successive rotations about the coordinate axes, applied z first, then y,
/// then x (the order for which the scalar part carries -sin sin sin):
///
///   cos(T/2) = cx cy cz - sx sy sz
///   sin^2 G  = (1 - cos ty cos tz) / (2 sin^2(T/2))
///   sin^2 H  = (1 - cos tx cos tz + sx sy sz) / (2 sin^2(T/2))
///   sin^2 L  = (1 - cos tx cos ty) / (2 sin^2(T/2))
///
/// The printed sin^2 H cross term uses half angles; the exact composition
/// needs sin tx sin ty sin tz instead, reported in sin2_h_exact. The sin^2
/// entries are NaN when Theta = 0.
ThreeAxisResultant three_axis_resultant(double theta_x, double theta_y, double theta_z);

// =============================================================================
// Couples
// =============================================================================

/// Translation produced by a couple; the same for every point, of length
/// 2 d sin(theta/2).
Vec3 couple_translation(const Couple& c);

/// One member of the infinite family of couples equivalent to translation `t`.
/// The first axis passes through the origin; `psi` is the azimuth of the couple
/// direction in the plane perpendicular to t, measured from the projection of +x
/// (or +y when t is parallel to x). Throws ZeroTranslation for t = 0 and
/// InvalidArgument for thetaB outside [1e-6, pi).
Couple translation_as_couple(const Vec3& t, double theta_b, double psi);

}  // namespace screwkit
