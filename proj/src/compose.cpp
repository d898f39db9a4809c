#include "screwkit/compose.hpp"

#include <limits>

namespace screwkit {

namespace {

struct HalfAngle {
    double w;  // cos(T/2)
    Vec3 v;    // Q sin(T/2)
};

HalfAngle compose_half(const Vec3& a1, double theta1, const Vec3& a2, double theta2) {
    const double c1 = std::cos(0.5 * theta1), s1 = std::sin(0.5 * theta1);
    const double c2 = std::cos(0.5 * theta2), s2 = std::sin(0.5 * theta2);
    return {c1 * c2 - s1 * s2 * a1.dot(a2),
            a1 * (s1 * c2) + a2 * (s2 * c1) + a2.cross(a1) * (s1 * s2)};
}

// Canonical (axis, angle in [0, pi]) from a half-angle pair; `fallback` is the
// axis reported for the null rotation.
std::pair<UnitVec3, double> canonical_from_half(HalfAngle h, const UnitVec3& fallback) {
    if (h.w < 0.0) {
        h.w = -h.w;
        h.v = -h.v;
    }
    const double sn = h.v.norm();
    if (sn <= 1e-12) return {fallback, 0.0};
    const Rotation r = canonicalize_rotation({{Vec3::zero(), make_unit(h.v)}, 2.0 * std::atan2(sn, h.w)});
    return {r.line.dir, r.angle};
}

}  // namespace

GibbsVector compose_gibbs(const GibbsVector& q1, const GibbsVector& q2) {
    const double den = 1.0 - 0.25 * q1.q.dot(q2.q);
    if (std::abs(den) <= 1e-12) {
        throw Error(ErrorCode::ResultantHalfTurn, "resultant rotation is a half-turn");
    }
    return GibbsVector{(q1.q + q2.q + 0.5 * q2.q.cross(q1.q)) / den};
}

std::pair<UnitVec3, double> compose_rotation_axes(const UnitVec3& axis1, double theta1,
                                                  const UnitVec3& axis2, double theta2) {
    return canonical_from_half(compose_half(axis1, theta1, axis2, theta2), axis1);
}

ResultantTrig resultant_trig(double theta1, double theta2, double nu) {
    const Vec3 a1 = Vec3::unit_x();
    const Vec3 a2{std::cos(nu), std::sin(nu), 0.0};
    const HalfAngle h = compose_half(a1, theta1, a2, theta2);
    const auto [axis, angle] = canonical_from_half(h, UnitVec3::from(a1));
    return {angle, axis.vec(), h.w, h.v};
}

std::pair<UnitVec3, UnitVec3> order_swap_axis(double theta1, double theta2, double nu) {
    const UnitVec3 a1 = UnitVec3::from(Vec3::unit_x());
    const UnitVec3 a2 = UnitVec3::from({std::cos(nu), std::sin(nu), 0.0});
    return {compose_rotation_axes(a1, theta1, a2, theta2).first,
            compose_rotation_axes(a2, theta2, a1, theta1).first};
}

SineProportionality sine_proportionality(double theta1, double theta2, double nu) {
    const double big_s = resultant_trig(theta1, theta2, nu).half_sin_axis.norm();
    if (big_s <= 1e-12) {
        throw Error(ErrorCode::DegenerateResultant, "resultant rotation vanishes");
    }
    const double sn = std::abs(std::sin(nu));
    return {std::abs(std::sin(0.5 * theta2)) * sn / big_s,
            std::abs(std::sin(0.5 * theta1)) * sn / big_s};
}

Displacement compose_displacements(const Displacement& d1, const Displacement& d2) {
    GibbsVector q;
    try {
        q = compose_gibbs(d1.q, d2.q);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ResultantHalfTurn) throw;
        try {
            q = gibbs_from_matrix(matrix_from_gibbs(d2.q) * matrix_from_gibbs(d1.q));
        } catch (const Error&) {
            throw Error(ErrorCode::ResultantHalfTurn, "resultant rotation is a half-turn");
        }
    }
    return {q, apply_displacement(d2, d1.delta)};
}

NonintersectingResult nonintersecting_pair(const Rotation& first, const Rotation& second,
                                           const Tolerance& tol) {
    const Rotation r1 = canonicalize_rotation(first);
    const Rotation r2 = canonicalize_rotation(second);
    const Vec3& a1 = r1.line.dir.vec();
    const Vec3& a2 = r2.line.dir.vec();
    const Vec3& p1 = r1.line.point;
    const Vec3& p2 = r2.line.point;

    // Canonical frame: e1 = axis1, e3 along the common perpendicular.
    Vec3 origin;
    Vec3 e3;
    double u;
    const Vec3 n = a1.cross(a2);
    if (n.norm() > 1e-12) {
        e3 = n / n.norm();
        const Vec3 w0 = p1 - p2;
        const double b = a1.dot(a2), d = a1.dot(w0), e = a2.dot(w0);
        const double den = 1.0 - b * b;
        origin = p1 + a1 * ((b * e - d) / den);
        const Vec3 foot2 = p2 + a2 * ((e - b * d) / den);
        u = (foot2 - origin).dot(e3);
    } else {
        const Vec3 w = p2 - p1;
        const Vec3 perp = w - a1 * a1.dot(w);
        u = perp.norm();
        if (u < tol.abs) throw Error(ErrorCode::IntersectingAxes, "axes intersect");
        e3 = perp / u;
        origin = p1;
    }
    if (std::abs(u) < tol.abs) throw Error(ErrorCode::IntersectingAxes, "axes intersect");
    const Vec3 e1 = a1;
    const Vec3 e2 = e3.cross(e1);
    const double nu = std::atan2(a2.dot(e2), a2.dot(e1));

    const double th2 = r2.angle;
    const double sn = std::sin(nu), cn = std::cos(nu);
    const double sh2 = std::sin(0.5 * th2);
    const Vec3 delta{-u * sn * std::sin(th2), u * cn * std::sin(th2), 2.0 * u * sh2 * sh2};

    const ResultantTrig trig = resultant_trig(r1.angle, th2, nu);
    const auto to_world = [&](const Vec3& v) { return e1 * v.x + e2 * v.y + e3 * v.z; };

    NonintersectingResult out;
    out.frame_delta = delta;
    out.distance = std::abs(u);
    out.nu = nu;
    if (trig.angle == 0.0) {
        if (delta.norm() <= tol.abs) {
            throw Error(ErrorCode::DegenerateResultant, "composition is the identity");
        }
        out.screw = ScrewTranslation{to_world(delta)};
        out.slide = 0.0;
        return out;
    }
    const Vec3& axis = trig.cosines;
    const double half = 0.5 * trig.angle;
    const Vec3 r0 = 0.5 * delta + (0.5 * std::cos(half) / std::sin(half)) * axis.cross(delta);
    const Vec3 on_axis = origin + to_world(r0 - axis * axis.dot(r0));
    UnitVec3 dir = make_unit(to_world(axis));
    out.slide = 2.0 * u * axis.z;
    if (trig.angle == kPi) {
        const UnitVec3 tie = canonicalize_rotation({{Vec3::zero(), dir}, kPi}).line.dir;
        if (!(tie == dir)) {
            dir = tie;
            out.slide = -out.slide;
        }
    }
    const AxisLine line = AxisLine{on_axis, dir}.normalized();
    out.screw = ScrewGeneral{line, trig.angle, out.slide};
    return out;
}

ThreeAxisResultant three_axis_resultant(double theta_x, double theta_y, double theta_z) {
    const double cx = std::cos(0.5 * theta_x), sx = std::sin(0.5 * theta_x);
    const double cy = std::cos(0.5 * theta_y), sy = std::sin(0.5 * theta_y);
    const double cz = std::cos(0.5 * theta_z), sz = std::sin(0.5 * theta_z);
    const double c = cx * cy * cz - sx * sy * sz;
    const double ac = std::min(std::abs(c), 1.0);
    const double two_s2 = 2.0 * (1.0 - ac * ac);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ThreeAxisResultant r{2.0 * std::acos(ac), nan, nan, nan, nan};
    if (two_s2 == 0.0) return r;
    const double ctx = std::cos(theta_x), cty = std::cos(theta_y), ctz = std::cos(theta_z);
    r.sin2_g = (1.0 - cty * ctz) / two_s2;
    r.sin2_h = (1.0 - ctx * ctz + sx * sy * sz) / two_s2;
    r.sin2_l = (1.0 - ctx * cty) / two_s2;
    r.sin2_h_exact =
        (1.0 - ctx * ctz + std::sin(theta_x) * std::sin(theta_y) * std::sin(theta_z)) / two_s2;
    return r;
}

Vec3 couple_translation(const Couple& c) {
    const Vec3& a = c.dir.vec();
    const Vec3 w = c.point1 - c.point2;
    const Vec3 perp = w - a * a.dot(w);
    return rodrigues_rotate(c.dir, -c.theta, perp) - perp;
}

Couple translation_as_couple(const Vec3& t, double theta_b, double psi) {
    const double len = t.norm();
    if (len <= 1e-12) throw Error(ErrorCode::ZeroTranslation, "translation is zero");
    if (!(theta_b >= 1e-6 && theta_b < kPi)) {
        throw Error(ErrorCode::InvalidArgument, "thetaB must lie in [1e-6, pi)");
    }
    const Vec3 that = t / len;
    Vec3 ref = Vec3::unit_x() - that * that.x;
    if (ref.norm() < 1e-9) ref = Vec3::unit_y() - that * that.y;
    const Vec3 e_ref = ref / ref.norm();
    const Vec3 e_perp = that.cross(e_ref);
    const UnitVec3 dir = make_unit(e_ref * std::cos(psi) + e_perp * std::sin(psi));
    const Vec3 p2 = rodrigues_rotate(dir, 0.5 * theta_b - 0.5 * kPi, t) / (2.0 * std::sin(0.5 * theta_b));
    return {dir, Vec3::zero(), p2, theta_b};
}

}  // namespace screwkit
