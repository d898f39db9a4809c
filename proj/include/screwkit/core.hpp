#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>

namespace screwkit {

inline constexpr double kPi = std::numbers::pi;

// =============================================================================
// Errors
// =============================================================================

enum class ErrorCode {
    ZeroVector,
    AngleAtPi,
    TraceSingular,
    ResultantHalfTurn,
    DegenerateResultant,
    IntersectingAxes,
    ZeroTranslation,
    GibbsOverflow,
    NoAxisDirection,
    ZeroSlide,
    DegenerateInput,
    ParallelPlanes,
    CollinearPoints,
    NonRigidData,
    TooFewPoints,
    CoplanarPoints,
    CoupleDegenerate,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// =============================================================================
// Tolerance
// =============================================================================

struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    /// |a - b| <= abs + rel * max(|a|, |b|)
    bool close(double a, double b) const {
        return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
    }
    bool negligible(double a) const { return std::abs(a) <= abs; }
};

// =============================================================================
// Vec3
// =============================================================================

struct Vec3 {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x{x_}, y{y_}, z{z_} {}

    static constexpr Vec3 zero() { return {}; }
    static constexpr Vec3 unit_x() { return {1.0, 0.0, 0.0}; }
    static constexpr Vec3 unit_y() { return {0.0, 1.0, 0.0}; }
    static constexpr Vec3 unit_z() { return {0.0, 0.0, 1.0}; }

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    constexpr bool operator==(const Vec3&) const = default;

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    // Right-handed throughout.
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double norm2() const { return dot(*this); }
    double norm() const { return std::hypot(x, y, z); }
    double max_abs() const { return std::max({std::abs(x), std::abs(y), std::abs(z)}); }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// Scalar triple product a . (b x c)
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

/// Unsigned angle between two nonzero vectors, well conditioned near 0 and pi.
double angle_between(const Vec3& a, const Vec3& b);

// =============================================================================
// UnitVec3
// =============================================================================

/// A direction. Construction normalizes and rejects vectors shorter than 1e-12.
class UnitVec3 {
public:
    /// +z
    constexpr UnitVec3() : v_{0.0, 0.0, 1.0} {}

    static UnitVec3 from(const Vec3& v);

    constexpr const Vec3& vec() const { return v_; }
    constexpr operator const Vec3&() const { return v_; }
    constexpr double x() const { return v_.x; }
    constexpr double y() const { return v_.y; }
    constexpr double z() const { return v_.z; }

    UnitVec3 operator-() const { return UnitVec3(-v_); }
    constexpr double dot(const Vec3& o) const { return v_.dot(o); }
    constexpr Vec3 cross(const Vec3& o) const { return v_.cross(o); }
    Vec3 operator*(double s) const { return v_ * s; }

    bool operator==(const UnitVec3&) const = default;

private:
    constexpr explicit UnitVec3(const Vec3& v) : v_{v} {}
    Vec3 v_;
};

inline Vec3 operator*(double s, const UnitVec3& u) { return u.vec() * s; }

/// v / |v|; throws ErrorCode::ZeroVector when |v| <= 1e-12.
UnitVec3 make_unit(const Vec3& v);

/// Some unit vector orthogonal to `dir`.
UnitVec3 any_orthogonal(const UnitVec3& dir);

// =============================================================================
// Mat3
// =============================================================================

/// Row-major 3x3 matrix acting on column vectors.
struct Mat3 {
    std::array<std::array<double, 3>, 3> a{};

    static Mat3 identity();
    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);
    static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2);
    /// [v]x, so that skew(v) * r == v x r
    static Mat3 skew(const Vec3& v);
    static Mat3 outer(const Vec3& u, const Vec3& v);

    double operator()(int r, int c) const { return a[r][c]; }
    double& operator()(int r, int c) { return a[r][c]; }

    Vec3 row(int r) const { return {a[r][0], a[r][1], a[r][2]}; }
    Vec3 col(int c) const { return {a[0][c], a[1][c], a[2][c]}; }

    Mat3 operator*(const Mat3& o) const;
    Vec3 operator*(const Vec3& v) const;
    Mat3 operator+(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    Mat3 operator*(double s) const;

    Mat3 transpose() const;
    double trace() const { return a[0][0] + a[1][1] + a[2][2]; }
    double det() const;
    double max_abs() const;
};

/// Solves m * x = b by Cramer's rule. Throws ErrorCode::InvalidArgument when |det m| <= min_det.
Vec3 solve3(const Mat3& m, const Vec3& b, double min_det = 1e-300);

// =============================================================================
// Lines and rotations
// =============================================================================

struct AxisLine {
    Vec3 point;
    UnitVec3 dir;

    /// Foot of the perpendicular dropped from `r` onto the line.
    Vec3 foot_of(const Vec3& r) const;
    double distance_to(const Vec3& r) const { return (r - foot_of(r)).norm(); }
    /// Same line, represented by its point closest to the origin.
    AxisLine normalized() const { return {foot_of(Vec3::zero()), dir}; }
};

/// Shortest distance between two lines (handles the parallel case).
double line_distance(const AxisLine& l1, const AxisLine& l2);

/// A finite rotation by `angle` radians, right-handed about `line.dir`.
struct Rotation {
    AxisLine line;
    double angle{0.0};
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Canonical form: angle in [0, pi], sign moved onto the direction, and at
/// exactly pi the direction's first nonzero component made positive.
Rotation canonicalize_rotation(const Rotation& r);

// =============================================================================
// Point correspondences
// =============================================================================

/// A body point before and after a displacement.
struct Correspondence {
    Vec3 before;
    Vec3 after;
};

}  // namespace screwkit
