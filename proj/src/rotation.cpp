#include "screwkit/rotation.hpp"

namespace screwkit {

bool is_proper_rotation(const Mat3& m, double tol) {
    const Mat3 e = m.transpose() * m - Mat3::identity();
    return e.max_abs() <= tol && std::abs(m.det() - 1.0) <= tol;
}

Vec3 rodrigues_rotate(const UnitVec3& axis, double theta, const Vec3& r) {
    const Vec3& t = axis.vec();
    const double c = std::cos(theta);
    return r * c + t * (t.dot(r) * (1.0 - c)) + t.cross(r) * std::sin(theta);
}

GibbsVector gibbs_from_axis_angle(const UnitVec3& axis, double theta) {
    if (!(std::abs(theta) < kPi - 1e-12)) {
        throw Error(ErrorCode::AngleAtPi, "tan(theta/2) is singular at a half-turn");
    }
    return GibbsVector{axis * (2.0 * std::tan(0.5 * theta))};
}

std::pair<UnitVec3, double> axis_angle_from_gibbs(const GibbsVector& q) {
    const double n = q.q.norm();
    if (n == 0.0) {
        return {UnitVec3{}, 0.0};
    }
    return {make_unit(q.q / n), 2.0 * std::atan(0.5 * n)};
}

RotationMatrix matrix_from_gibbs(const GibbsVector& g) {
    const double m = g.m(), n = g.n(), p = g.p();
    const double mm = m * m, nn = n * n, pp = p * p;
    const double s = 1.0 / (1.0 + (mm + nn + pp) / 4.0);
    RotationMatrix r;
    r.m = Mat3::from_rows({1.0 + (mm - nn - pp) / 4.0, m * n / 2.0 - p, p * m / 2.0 + n},
                          {m * n / 2.0 + p, 1.0 + (nn - pp - mm) / 4.0, n * p / 2.0 - m},
                          {p * m / 2.0 - n, n * p / 2.0 + m, 1.0 + (pp - mm - nn) / 4.0}) *
          s;
    return r;
}

GibbsVector gibbs_from_matrix(const RotationMatrix& rot) {
    const Mat3& a = rot.m;
    const double den = 1.0 + a.trace();
    if (!(den > 1e-9)) {
        throw Error(ErrorCode::TraceSingular, "1 + trace <= 1e-9: half-turn has no Gibbs vector");
    }
    // Right-handed: the skew part of M is [q]x scaled by 1/(1 + q^2/4).
    return GibbsVector{2.0 * (a(2, 1) - a(1, 2)) / den, 2.0 * (a(0, 2) - a(2, 0)) / den,
                       2.0 * (a(1, 0) - a(0, 1)) / den};
}

RotationMatrix matrix_from_axis_angle(const UnitVec3& axis, double theta) {
    const Vec3& t = axis.vec();
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {Mat3::identity() * c + Mat3::outer(t, t) * (1.0 - c) + Mat3::skew(t) * s};
}

Vec3 apply_displacement(const Displacement& d, const Vec3& r) {
    const Vec3& q = d.q.q;
    const double q2 = q.norm2();
    const Vec3 rot = (q.cross(r) + 0.5 * (q * q.dot(r) - r * q2)) / (1.0 + 0.25 * q2);
    return r + d.delta + rot;
}

Vec3 midpoint_of(const Displacement& d, const Vec3& r) {
    return r + 0.5 * (apply_displacement(d, r) - r);
}

Displacement displacement_from_rotation(const Rotation& rot) {
    const GibbsVector q = gibbs_from_axis_angle(rot.line.dir, rot.angle);
    // Image of the origin: p + R(0 - p).
    const Vec3& p = rot.line.point;
    return {q, p + rodrigues_rotate(rot.line.dir, rot.angle, -p)};
}

Displacement inverse(const Displacement& d) {
    // r = R^T (r' - delta): Gibbs vector -q, origin image -R^T delta.
    const GibbsVector qi{-d.q.q};
    const Vec3 back = apply_displacement({qi, Vec3::zero()}, d.delta);
    return {qi, -back};
}

std::pair<RotationMatrix, Vec3> matrix_form(const Displacement& d) {
    return {matrix_from_gibbs(d.q), d.delta};
}

}  // namespace screwkit
