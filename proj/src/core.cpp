#include "screwkit/core.hpp"

#include <ostream>

namespace screwkit {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::AngleAtPi: return "AngleAtPi";
        case ErrorCode::TraceSingular: return "TraceSingular";
        case ErrorCode::ResultantHalfTurn: return "ResultantHalfTurn";
        case ErrorCode::DegenerateResultant: return "DegenerateResultant";
        case ErrorCode::IntersectingAxes: return "IntersectingAxes";
        case ErrorCode::ZeroTranslation: return "ZeroTranslation";
        case ErrorCode::GibbsOverflow: return "GibbsOverflow";
        case ErrorCode::NoAxisDirection: return "NoAxisDirection";
        case ErrorCode::ZeroSlide: return "ZeroSlide";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::ParallelPlanes: return "ParallelPlanes";
        case ErrorCode::CollinearPoints: return "CollinearPoints";
        case ErrorCode::NonRigidData: return "NonRigidData";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::CoplanarPoints: return "CoplanarPoints";
        case ErrorCode::CoupleDegenerate: return "CoupleDegenerate";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

UnitVec3 UnitVec3::from(const Vec3& v) {
    const double n = v.norm();
    if (!(n > 1e-12)) {
        throw Error(ErrorCode::ZeroVector, "cannot normalize a vector of length <= 1e-12");
    }
    return UnitVec3(v / n);
}

UnitVec3 make_unit(const Vec3& v) { return UnitVec3::from(v); }

UnitVec3 any_orthogonal(const UnitVec3& dir) {
    // Cross with the basis vector least aligned with dir.
    const Vec3& d = dir.vec();
    const Vec3 ref = (std::abs(d.x) <= std::abs(d.y) && std::abs(d.x) <= std::abs(d.z))
                         ? Vec3::unit_x()
                         : (std::abs(d.y) <= std::abs(d.z) ? Vec3::unit_y() : Vec3::unit_z());
    return make_unit(d.cross(ref));
}

// -----------------------------------------------------------------------------

Mat3 Mat3::identity() {
    Mat3 m;
    m.a[0][0] = m.a[1][1] = m.a[2][2] = 1.0;
    return m;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 m;
    m.a = {{{r0.x, r0.y, r0.z}, {r1.x, r1.y, r1.z}, {r2.x, r2.y, r2.z}}};
    return m;
}

Mat3 Mat3::from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return from_rows(c0, c1, c2).transpose();
}

Mat3 Mat3::skew(const Vec3& v) {
    return from_rows({0.0, -v.z, v.y}, {v.z, 0.0, -v.x}, {-v.y, v.x, 0.0});
}

Mat3 Mat3::outer(const Vec3& u, const Vec3& v) {
    return from_rows(v * u.x, v * u.y, v * u.z);
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j] + a[i][2] * o.a[2][j];
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const { return {row(0).dot(v), row(1).dot(v), row(2).dot(v)}; }

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
    return r;
}

Mat3 Mat3::operator-(const Mat3& o) const { return *this + o * -1.0; }

Mat3 Mat3::operator*(double s) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j] * s;
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
    return r;
}

double Mat3::det() const { return triple(row(0), row(1), row(2)); }

double Mat3::max_abs() const {
    double m = 0.0;
    for (const auto& r : a)
        for (double v : r) m = std::max(m, std::abs(v));
    return m;
}

Vec3 solve3(const Mat3& m, const Vec3& b, double min_det) {
    const double d = m.det();
    if (!(std::abs(d) > min_det)) {
        throw Error(ErrorCode::InvalidArgument, "singular 3x3 system");
    }
    const Vec3 c0 = m.col(0), c1 = m.col(1), c2 = m.col(2);
    return Vec3{triple(b, c1, c2), triple(c0, b, c2), triple(c0, c1, b)} / d;
}

// -----------------------------------------------------------------------------

Vec3 AxisLine::foot_of(const Vec3& r) const {
    return point + dir.vec() * dir.dot(r - point);
}

double line_distance(const AxisLine& l1, const AxisLine& l2) {
    const Vec3 n = l1.dir.cross(l2.dir);
    const Vec3 w = l2.point - l1.point;
    const double s = n.norm();
    if (s <= 1e-12) {
        return l1.distance_to(l2.point);
    }
    return std::abs(w.dot(n)) / s;
}

double wrap_angle(double angle) {
    double a = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

Rotation canonicalize_rotation(const Rotation& r) {
    Rotation out = r;
    out.angle = wrap_angle(r.angle);
    if (out.angle < 0.0) {
        out.angle = -out.angle;
        out.line.dir = -out.line.dir;
    }
    if (out.angle == kPi) {
        const Vec3& d = out.line.dir.vec();
        const double first = d.x != 0.0 ? d.x : (d.y != 0.0 ? d.y : d.z);
        if (first < 0.0) out.line.dir = -out.line.dir;
    }
    return out;
}

}  // namespace screwkit
