#include "screwkit/infinitesimal.hpp"

#include <vector>

namespace screwkit {

Twist twist_of_rotation(const AxisLine& line, double theta_small) {
    const Vec3& d = line.dir.vec();
    return {theta_small * d.cross(-line.point), theta_small * d};
}

Twist compose_twists(std::span<const Twist> ts) {
    std::array<std::vector<double>, 6> parts;
    for (auto& p : parts) p.reserve(ts.size());
    for (const Twist& t : ts) {
        parts[0].push_back(t.delta.x);
        parts[1].push_back(t.delta.y);
        parts[2].push_back(t.delta.z);
        parts[3].push_back(t.omega.x);
        parts[4].push_back(t.omega.y);
        parts[5].push_back(t.omega.z);
    }
    std::array<double, 6> sums{};
    for (int i = 0; i < 6; ++i) {
        std::sort(parts[i].begin(), parts[i].end());
        for (double v : parts[i]) sums[i] += v;
    }
    return {{sums[0], sums[1], sums[2]}, {sums[3], sums[4], sums[5]}};
}

bool twist_equilibrium(std::span<const Twist> ts, double tol) {
    const Twist s = compose_twists(ts);
    return s.delta.norm() <= tol && s.omega.norm() <= tol;
}

double rotation_moment(const AxisLine& rot_line, double theta, const UnitVec3& target_dir,
                       const Vec3& target_point) {
    return theta * triple(rot_line.dir.vec(), target_point - rot_line.point, target_dir.vec());
}

Vec3 parallel_rotation_center(std::span<const AxisLine> lines, std::span<const double> thetas,
                              double tol) {
    if (lines.size() != thetas.size() || lines.empty()) {
        throw Error(ErrorCode::InvalidArgument, "lines and angles must pair up");
    }
    const Vec3& d0 = lines.front().dir.vec();
    Vec3 weighted;
    double total = 0.0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].dir.vec().cross(d0).norm() > 1e-9) {
            throw Error(ErrorCode::InvalidArgument, "rotation lines are not parallel");
        }
        const Vec3& p = lines[i].point;
        weighted += thetas[i] * (p - d0 * d0.dot(p));
        total += thetas[i];
    }
    if (std::abs(total) <= tol) {
        throw Error(ErrorCode::CoupleDegenerate, "angles cancel: the resultant is a translation");
    }
    return weighted / total;
}

double virtual_work(std::span<const PointForce> forces, const Twist& tw) {
    double w = 0.0;
    for (const PointForce& pf : forces) w += pf.f.dot(tw.velocity_at(pf.at));
    return w;
}

bool force_equilibrium(std::span<const PointForce> forces, double tol) {
    Vec3 net, moment;
    for (const PointForce& pf : forces) {
        net += pf.f;
        moment += pf.at.cross(pf.f);
    }
    return net.max_abs() <= tol && moment.max_abs() <= tol;
}

}  // namespace screwkit
