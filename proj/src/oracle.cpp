#include "screwkit/oracle.hpp"

#include <Eigen/Dense>

namespace screwkit::oracle {

namespace {

Eigen::Matrix3d to_eigen(const Mat3& m) {
    Eigen::Matrix3d e;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) e(r, c) = m(r, c);
    return e;
}

Mat3 from_eigen(const Eigen::Matrix3d& e) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = e(r, c);
    return m;
}

Eigen::Vector3d to_eigen(const Vec3& v) { return {v.x, v.y, v.z}; }
Vec3 vec_from_eigen(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

}  // namespace

HomTransform hom_from_displacement(const Displacement& d) {
    const Eigen::Vector3d half = 0.5 * to_eigen(d.q.q);
    Eigen::Quaterniond quat(1.0, half.x(), half.y(), half.z());
    quat.normalize();
    return {RotationMatrix{from_eigen(quat.toRotationMatrix())}, d.delta};
}

Displacement displacement_from_hom(const HomTransform& h) {
    const Eigen::Matrix3d r = to_eigen(h.R.m);
    if (!(1.0 + r.trace() > 1e-9)) {
        throw Error(ErrorCode::TraceSingular, "1 + trace <= 1e-9");
    }
    Eigen::Quaterniond quat(r);
    if (quat.w() < 0.0) quat.coeffs() *= -1.0;
    return {GibbsVector{vec_from_eigen(2.0 * quat.vec() / quat.w())}, h.d};
}

HomTransform hom_from_rotation(const Rotation& rot) {
    const Eigen::Matrix3d r =
        Eigen::AngleAxisd(rot.angle, to_eigen(rot.line.dir.vec())).toRotationMatrix();
    const Eigen::Vector3d p = to_eigen(rot.line.point);
    return {RotationMatrix{from_eigen(r)}, vec_from_eigen(p - r * p)};
}

HomTransform hom_from_translation(const Vec3& t) { return {RotationMatrix{}, t}; }

HomTransform hom_compose(const HomTransform& h1, const HomTransform& h2) {
    return {h2.R * h1.R, h2.R * h1.d + h2.d};
}

Screw screw_from_hom_bruteforce(const HomTransform& h) {
    const Eigen::Matrix3d r = to_eigen(h.R.m);
    const Eigen::Vector3d d = to_eigen(h.d);
    const Eigen::Matrix3d a = r - Eigen::Matrix3d::Identity();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector3d sv = svd.singularValues();
    if (sv(0) < 1e-12) {
        if (d.norm() == 0.0) return ScrewIdentity{};
        return ScrewTranslation{vec_from_eigen(d)};
    }
    Eigen::Vector3d axis = svd.matrixV().col(2);
    const Eigen::Vector3d vee(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    double sin_theta = 0.5 * vee.dot(axis);
    if (sin_theta < 0.0) {
        axis = -axis;
        sin_theta = -sin_theta;
    }
    const double theta = std::atan2(sin_theta, 0.5 * (r.trace() - 1.0));
    const double slide = d.dot(axis);
    const Eigen::Vector3d d_perp = d - slide * axis;
    // Minimum-norm solution on the two nonzero singular values.
    Eigen::Vector3d p = Eigen::Vector3d::Zero();
    const Eigen::Vector3d rhs = -d_perp;
    for (int i = 0; i < 2; ++i) {
        p += (svd.matrixU().col(i).dot(rhs) / sv(i)) * svd.matrixV().col(i);
    }
    ScrewGeneral g{{vec_from_eigen(p), make_unit(vec_from_eigen(axis))}, theta, slide};
    const Rotation canon = canonicalize_rotation({g.axis, g.theta});
    if (!(canon.line.dir == g.axis.dir)) {
        g.axis.dir = canon.line.dir;
        g.slide = -g.slide;
    }
    g.theta = canon.angle;
    return g;
}

HomTransform kabsch_fit(std::span<const Correspondence> corrs) {
    if (corrs.size() < 3) throw Error(ErrorCode::TooFewPoints, "at least three correspondences needed");
    Eigen::Vector3d cb = Eigen::Vector3d::Zero(), ca = Eigen::Vector3d::Zero();
    for (const Correspondence& c : corrs) {
        cb += to_eigen(c.before);
        ca += to_eigen(c.after);
    }
    cb /= static_cast<double>(corrs.size());
    ca /= static_cast<double>(corrs.size());
    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (const Correspondence& c : corrs) {
        cov += (to_eigen(c.after) - ca) * (to_eigen(c.before) - cb).transpose();
    }
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d fix = Eigen::Matrix3d::Identity();
    if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0) fix(2, 2) = -1.0;
    const Eigen::Matrix3d r = svd.matrixU() * fix * svd.matrixV().transpose();
    return {RotationMatrix{from_eigen(r)}, vec_from_eigen(ca - r * cb)};
}

}  // namespace screwkit::oracle
