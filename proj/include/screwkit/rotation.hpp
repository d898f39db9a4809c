#pragma once

#include "screwkit/core.hpp"

#include <utility>

namespace screwkit {

/// Rational rotation parameter q = (m, n, p) = 2 tan(theta/2) * axis.
///
/// Defined for rotation angles in [0, pi); a half-turn has no finite
/// representation and every conversion that would produce one throws.
struct GibbsVector {
    Vec3 q;

    constexpr GibbsVector() = default;
    constexpr explicit GibbsVector(const Vec3& v) : q{v} {}
    constexpr GibbsVector(double m, double n, double p) : q{m, n, p} {}

    constexpr double m() const { return q.x; }
    constexpr double n() const { return q.y; }
    constexpr double p() const { return q.z; }
    constexpr bool is_zero() const { return q.x == 0.0 && q.y == 0.0 && q.z == 0.0; }
    constexpr bool operator==(const GibbsVector&) const = default;
};

/// Proper orthonormal matrix mapping r -> M * r. Rows are (a, b, c),
/// (a', b', c'), (a'', b'', c'').
struct RotationMatrix {
    Mat3 m = Mat3::identity();

    Vec3 operator*(const Vec3& r) const { return m * r; }
    RotationMatrix operator*(const RotationMatrix& o) const { return {m * o.m}; }
    RotationMatrix inverse() const { return {m.transpose()}; }
    double operator()(int r, int c) const { return m(r, c); }
};

/// max |M^T M - I| and |det M - 1| both within `tol`.
bool is_proper_rotation(const Mat3& m, double tol = 1e-9);

/// General rigid displacement r -> R(q) r + delta.
///
/// `delta` is where the origin of coordinates is carried. The constant Gamma of
/// the midpoint law Delta = Gamma + q x omega is derived rather than stored.
struct Displacement {
    GibbsVector q;
    Vec3 delta;

    static Displacement identity() { return {}; }
    static Displacement translation(const Vec3& t) { return {GibbsVector{}, t}; }

    /// Gamma = delta - (1/2) q x delta
    Vec3 gamma() const { return delta - 0.5 * q.q.cross(delta); }
};

/// First-order displacement field v(r) = delta + omega x r.
struct Twist {
    Vec3 delta;
    Vec3 omega;

    Vec3 velocity_at(const Vec3& r) const { return delta + omega.cross(r); }
    Twist operator+(const Twist& o) const { return {delta + o.delta, omega + o.omega}; }
    Twist operator-() const { return {-delta, -omega}; }
    Twist operator*(double s) const { return {delta * s, omega * s}; }
    bool operator==(const Twist&) const = default;
};

// =============================================================================
// Rotation formulas
// =============================================================================

/// r' = r cos(theta) + axis (axis . r)(1 - cos(theta)) + (axis x r) sin(theta)
Vec3 rodrigues_rotate(const UnitVec3& axis, double theta, const Vec3& r);

/// Throws AngleAtPi when |theta| >= pi - 1e-12.
GibbsVector gibbs_from_axis_angle(const UnitVec3& axis, double theta);

/// theta = 2 atan(|q|/2) in [0, pi). The zero vector maps to (+z, 0).
std::pair<UnitVec3, double> axis_angle_from_gibbs(const GibbsVector& q);

/// The rational matrix
///
///   [1 + q^2/4]^-1 * | 1+(m^2-n^2-p^2)/4   mn/2 - p            pm/2 + n          |
///                    | mn/2 + p            1+(n^2-p^2-m^2)/4   np/2 - m          |
///                    | pm/2 - n            np/2 + m            1+(p^2-m^2-n^2)/4 |
RotationMatrix matrix_from_gibbs(const GibbsVector& q);

/// m = 2(b'' - c')/(1 + a + b' + c''), n = 2(c - a'')/(...), p = 2(a' - b)/(...).
/// Throws TraceSingular when 1 + trace <= 1e-9.
GibbsVector gibbs_from_matrix(const RotationMatrix& rot);

/// Matrix of a rotation given by axis and angle; valid for every angle, including pi.
RotationMatrix matrix_from_axis_angle(const UnitVec3& axis, double theta);

// =============================================================================
// Displacements
// =============================================================================

/// r + delta + [q x r + (1/2)(q (q . r) - q^2 r)] / (1 + q^2/4)
Vec3 apply_displacement(const Displacement& d, const Vec3& r);

/// Chord midpoint r + (1/2)(apply(d, r) - r).
Vec3 midpoint_of(const Displacement& d, const Vec3& r);

/// Rotation about an arbitrary line. Throws AngleAtPi for half-turns.
Displacement displacement_from_rotation(const Rotation& rot);

/// Inverse displacement; the Gibbs vector of the inverse is -q.
Displacement inverse(const Displacement& d);

/// The (R, d) pair of a displacement, evaluated through the rational matrix.
std::pair<RotationMatrix, Vec3> matrix_form(const Displacement& d);

}  // namespace screwkit
