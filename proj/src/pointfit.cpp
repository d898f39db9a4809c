#include "screwkit/pointfit.hpp"

namespace screwkit {

namespace {

double triangle_scale(const Vec3& a, const Vec3& b, const Vec3& c) {
    return std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()});
}

void validate_triangle(const Correspondence& c0, const Correspondence& c1, const Correspondence& c2) {
    const double scale = triangle_scale(c0.before, c1.before, c2.before);
    const double area2 = (c1.before - c0.before).cross(c2.before - c0.before).norm();
    if (scale == 0.0 || 0.5 * area2 <= 1e-9 * scale * scale) {
        throw Error(ErrorCode::CollinearPoints, "before-points are collinear");
    }
    const auto changed = [&](const Correspondence& x, const Correspondence& y) {
        return std::abs((x.before - y.before).norm() - (x.after - y.after).norm()) > 1e-6 * scale;
    };
    if (changed(c0, c1) || changed(c1, c2) || changed(c0, c2)) {
        throw Error(ErrorCode::NonRigidData, "pairwise distances are not preserved");
    }
}

Mat3 triangle_frame(const Vec3& p0, const Vec3& p1, const Vec3& p2) {
    const Vec3 e1 = (p1 - p0) / (p1 - p0).norm();
    const Vec3 n = (p1 - p0).cross(p2 - p0);
    const Vec3 e3 = n / n.norm();
    return Mat3::from_cols(e1, e3.cross(e1), e3);
}

}  // namespace

Displacement fit_displacement(const Correspondence& c0, const Correspondence& c1,
                              const Correspondence& c2) {
    validate_triangle(c0, c1, c2);
    const Mat3 fb = triangle_frame(c0.before, c1.before, c2.before);
    const Mat3 fa = triangle_frame(c0.after, c1.after, c2.after);
    const RotationMatrix r{fa * fb.transpose()};
    const GibbsVector q = gibbs_from_matrix(r);
    // Origin image from the centroids, then re-expressed through the rational map.
    const Vec3 cb = (c0.before + c1.before + c2.before) / 3.0;
    const Vec3 ca = (c0.after + c1.after + c2.after) / 3.0;
    const Displacement rot_only{q, Vec3::zero()};
    return {q, ca - apply_displacement(rot_only, cb)};
}

Displacement fit_displacement_elimination(const Correspondence& c0, const Correspondence& c1,
                                          const Correspondence& c2) {
    validate_triangle(c0, c1, c2);
    const Correspondence* cs[3] = {&c0, &c1, &c2};
    Vec3 w[3], big_d[3];
    for (int i = 0; i < 3; ++i) {
        w[i] = 0.5 * (cs[i]->before + cs[i]->after);
        big_d[i] = cs[i]->after - cs[i]->before;
    }
    Mat3 m;
    Vec3 rhs;
    for (int i = 1; i < 3; ++i) {
        const Vec3 a = w[i] - w[0];
        const Vec3 b = big_d[i] - big_d[0];
        m = m + Mat3::identity() * a.norm2() - Mat3::outer(a, a);
        rhs += a.cross(b);
    }
    const Vec3 q = solve3(m, rhs);
    const Vec3 gamma = big_d[0] - q.cross(w[0]);
    const Vec3 delta = (gamma + 0.5 * q.cross(gamma) + 0.25 * q * q.dot(gamma)) / (1.0 + 0.25 * q.norm2());
    return {GibbsVector{q}, delta};
}

RigidityReport check_rigidity(std::span<const Correspondence> corrs) {
    if (corrs.size() < 4) throw Error(ErrorCode::TooFewPoints, "at least four correspondences needed");
    double scale = 0.0;
    for (std::size_t i = 0; i < corrs.size(); ++i) {
        for (std::size_t j = i + 1; j < corrs.size(); ++j) {
            scale = std::max(scale, (corrs[i].before - corrs[j].before).norm());
        }
    }
    RigidityReport rep;
    rep.rigid = true;
    for (std::size_t i = 0; i < corrs.size() && rep.rigid; ++i) {
        for (std::size_t j = i + 1; j < corrs.size(); ++j) {
            const double db = (corrs[i].before - corrs[j].before).norm();
            const double da = (corrs[i].after - corrs[j].after).norm();
            if (std::abs(db - da) > 1e-6 * scale) {
                rep.rigid = false;
                break;
            }
        }
    }
    const auto volume = [&](auto pick) {
        const Vec3 o = pick(corrs[0]);
        return triple(pick(corrs[1]) - o, pick(corrs[2]) - o, pick(corrs[3]) - o);
    };
    const double vb = volume([](const Correspondence& c) { return c.before; });
    const double va = volume([](const Correspondence& c) { return c.after; });
    if (std::abs(vb) > 1e-9 * scale * scale * scale) {
        rep.proper = (vb > 0.0) == (va > 0.0);
    }
    return rep;
}

}  // namespace screwkit
