#include "screwkit/screw_types.hpp"
#include "screwkit/rotation.hpp"

namespace screwkit {

Screw screw_from_axis_angle_origin(const UnitVec3& dir, double theta, const Vec3& origin_image) {
    Rotation canon = canonicalize_rotation({{Vec3::zero(), dir}, theta});
    if (canon.angle == 0.0) {
        if (origin_image == Vec3::zero()) return ScrewIdentity{};
        return ScrewTranslation{origin_image};
    }
    const Vec3& a = canon.line.dir.vec();
    const Vec3& d = origin_image;
    const double half = 0.5 * canon.angle;
    const Vec3 r0 = 0.5 * d + (0.5 * std::cos(half) / std::sin(half)) * a.cross(d);
    const Vec3 foot = r0 - a * a.dot(r0);
    return ScrewGeneral{{foot, canon.line.dir}, canon.angle, d.dot(a)};
}

Vec3 apply_screw(const Screw& s, const Vec3& r) {
    if (std::holds_alternative<ScrewIdentity>(s)) return r;
    if (const auto* t = std::get_if<ScrewTranslation>(&s)) return r + t->t;
    const auto& g = std::get<ScrewGeneral>(s);
    const Vec3 rel = r - g.axis.point;
    return g.axis.point + rodrigues_rotate(g.axis.dir, g.theta, rel) + g.slide * g.axis.dir;
}

}  // namespace screwkit
