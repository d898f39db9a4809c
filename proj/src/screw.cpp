#include "screwkit/screw.hpp"
#include "screwkit/compose.hpp"

namespace screwkit {

Screw screw_from_displacement(const Displacement& d) {
    const Vec3& q = d.q.q;
    if (d.q.is_zero()) {
        if (d.delta == Vec3::zero()) return ScrewIdentity{};
        return ScrewTranslation{d.delta};
    }
    const double q2 = q.norm2();
    const double qn = std::sqrt(q2);
    const UnitVec3 dir = make_unit(q);
    const Vec3 r0 = 0.5 * d.delta - d.delta.cross(q) / q2;
    const Vec3 foot = r0 - dir.vec() * dir.dot(r0);
    const double theta = 2.0 * std::atan(0.5 * qn);
    return ScrewGeneral{{foot, dir}, theta, d.delta.dot(dir.vec())};
}

Displacement displacement_from_screw(const Screw& s) {
    if (std::holds_alternative<ScrewIdentity>(s)) return Displacement::identity();
    if (const auto* t = std::get_if<ScrewTranslation>(&s)) return Displacement::translation(t->t);
    const auto& g = std::get<ScrewGeneral>(s);
    GibbsVector q;
    try {
        q = gibbs_from_axis_angle(g.axis.dir, g.theta);
    } catch (const Error&) {
        throw Error(ErrorCode::GibbsOverflow, "half-turn screw has no Gibbs vector");
    }
    const Vec3& u = g.axis.point;
    return {q, g.slide * g.axis.dir + u - rodrigues_rotate(g.axis.dir, g.theta, u)};
}

AbsoluteTranslation absolute_translation(const Displacement& d) {
    if (d.q.is_zero()) {
        if (d.delta == Vec3::zero()) {
            throw Error(ErrorCode::NoAxisDirection, "identity has no axis direction");
        }
        return {d.delta.norm(), true};
    }
    return {d.delta.dot(make_unit(d.q.q).vec()), false};
}

Screw compose_rotations(const Rotation& first, const Rotation& second) {
    const Vec3& p1 = first.line.point;
    const Vec3& p2 = second.line.point;
    const Vec3 o1 = p1 + rodrigues_rotate(first.line.dir, first.angle, -p1);
    const Vec3 o2 = p2 + rodrigues_rotate(second.line.dir, second.angle, o1 - p2);
    const auto [dir, angle] =
        compose_rotation_axes(first.line.dir, first.angle, second.line.dir, second.angle);
    return screw_from_axis_angle_origin(dir, angle, o2);
}

ConjugatePair conjugate_pair_decompose(const Screw& s, double theta_b, double psi) {
    const auto* g = std::get_if<ScrewGeneral>(&s);
    if (g == nullptr) throw Error(ErrorCode::InvalidArgument, "conjugate pair needs a general screw");
    const Rotation central = rotation_of(*g);
    if (std::abs(g->slide) <= 1e-12) {
        return {central, {central.line, 0.0}, true};
    }
    const Vec3& u = g->axis.point;
    const Couple c = translation_as_couple(g->slide * g->axis.dir, theta_b, psi);
    const auto [dir_a, angle_a] = compose_rotation_axes(g->axis.dir, g->theta, c.dir, c.theta);
    const Rotation line_a = canonicalize_rotation({{u, dir_a}, angle_a});
    const Rotation line_b = canonicalize_rotation({{u + c.point2, c.dir}, -c.theta});
    return {line_a, {line_b.line.normalized(), line_b.angle}, false};
}

InvariantSides conjugate_invariant(const Rotation& line_a, const Rotation& line_b) {
    const Rotation a = canonicalize_rotation(line_a);
    const Rotation b = canonicalize_rotation(line_b);
    const Screw c = compose_rotations(a, b);
    if (std::holds_alternative<ScrewIdentity>(c)) {
        throw Error(ErrorCode::DegenerateResultant, "pair composes to the identity");
    }
    const double nu = angle_between(a.line.dir.vec(), b.line.dir.vec());
    const double lhs = line_distance(a.line, b.line) * std::sin(nu) * std::sin(0.5 * a.angle) *
                       std::sin(0.5 * b.angle);
    double rhs = 0.0;
    if (const auto* g = std::get_if<ScrewGeneral>(&c)) {
        rhs = 0.5 * std::abs(g->slide) * std::sin(0.5 * g->theta);
    }
    return {lhs, rhs};
}

namespace {

void check_euler_input(const Correspondence& a, const Correspondence& b) {
    const double scale = std::max({a.before.norm(), b.before.norm(), a.after.norm(), b.after.norm()});
    if (scale == 0.0 || a.before.cross(b.before).norm() <= 1e-9 * scale * scale) {
        throw Error(ErrorCode::DegenerateInput, "O, A and B are collinear");
    }
    const double tol = 1e-6 * scale;
    if (std::abs(a.before.norm() - a.after.norm()) > tol ||
        std::abs(b.before.norm() - b.after.norm()) > tol ||
        std::abs((a.before - b.before).norm() - (a.after - b.after).norm()) > tol) {
        throw Error(ErrorCode::DegenerateInput, "data is not a rotation about the origin");
    }
    const double chord_tol = 1e-12 * scale;
    if ((a.after - a.before).norm() <= chord_tol && (b.after - b.before).norm() <= chord_tol) {
        throw Error(ErrorCode::DegenerateInput, "identity has no unique axis");
    }
}

// Signed rotation angle about `dir` carrying `from` to `to`, measured on the
// components across dir.
double signed_angle_about(const Vec3& dir, const Vec3& from, const Vec3& to) {
    const Vec3 f = from - dir * dir.dot(from);
    const Vec3 t = to - dir * dir.dot(to);
    return std::atan2(triple(dir, f, t), f.dot(t));
}

}  // namespace

Rotation euler_fixed_rotation(const Correspondence& a, const Correspondence& b) {
    check_euler_input(a, b);
    const double scale = std::max(a.before.norm(), b.before.norm());
    const Vec3 ca = a.after - a.before;
    const Vec3 cb = b.after - b.before;
    const double chord_tol = 1e-12 * scale;
    Vec3 axis;
    if (ca.norm() <= chord_tol) {
        axis = a.before;
    } else if (cb.norm() <= chord_tol) {
        axis = b.before;
    } else {
        axis = ca.cross(cb);
        if (axis.norm() <= 1e-9 * ca.norm() * cb.norm()) {
            axis = a.before.cross(b.before).cross(a.after.cross(b.after));
        }
    }
    if (axis.norm() <= 1e-12 * scale * scale * scale * scale) {
        throw Error(ErrorCode::DegenerateInput, "axis direction undetermined");
    }
    const Vec3 dir = axis / axis.norm();
    // Measure the angle on whichever point lies farther from the axis.
    const Vec3 pa = a.before - dir * dir.dot(a.before);
    const Vec3 pb = b.before - dir * dir.dot(b.before);
    const Correspondence& m = pa.norm2() >= pb.norm2() ? a : b;
    return canonicalize_rotation({{Vec3::zero(), make_unit(dir)}, signed_angle_about(dir, m.before, m.after)});
}

AxisLine euler_fixed_axis(const Correspondence& a, const Correspondence& b) {
    return euler_fixed_rotation(a, b).line;
}

AxisLine levy_central_axis(const Correspondence& a, const Correspondence& b, const UnitVec3& dir) {
    const Vec3& k = dir.vec();
    const auto across = [&](const Vec3& v) { return v - k * k.dot(v); };
    const Vec3 na = across(a.after - a.before);
    const Vec3 nb = across(b.after - b.before);
    const double scale = std::max({(a.before - b.before).norm(), (a.after - a.before).norm(),
                                   (b.after - b.before).norm(), 1e-300});
    const double tiny = 1e-12 * scale;
    if (na.norm() <= tiny && nb.norm() <= tiny) {
        throw Error(ErrorCode::ParallelPlanes, "both chords are parallel to the axis");
    }
    if (na.norm() <= tiny) return AxisLine{a.before, dir}.normalized();
    if (nb.norm() <= tiny) return AxisLine{b.before, dir}.normalized();

    const Vec3 ma = 0.5 * (a.before + a.after);
    const Vec3 mb = 0.5 * (b.before + b.after);
    if (na.cross(nb).norm() > 1e-9 * na.norm() * nb.norm()) {
        const Mat3 m = Mat3::from_rows(na, nb, k);
        return AxisLine{solve3(m, {na.dot(ma), nb.dot(mb), 0.0}), dir}.normalized();
    }
    const double theta = signed_angle_about(k, b.before - a.before, b.after - a.after);
    if (std::abs(theta) <= 1e-12) {
        throw Error(ErrorCode::ParallelPlanes, "bisecting planes are parallel");
    }
    const Vec3 p = ma + k.cross(na) / (2.0 * std::tan(0.5 * theta));
    return AxisLine{p, dir}.normalized();
}

double displaced_line_angle(double theta, double phi) {
    const double s = std::abs(std::sin(0.5 * theta));
    const double c = std::cos(0.5 * theta);
    const double cp = std::cos(phi);
    return 2.0 * std::atan2(s * std::sin(phi), std::sqrt(c * c + s * s * cp * cp));
}

}  // namespace screwkit
