#include "test_support.hpp"

#include "screwkit/rotation.hpp"

using namespace screwkit;

namespace {
const UnitVec3 kX = UnitVec3::from({1, 0, 0});
const UnitVec3 kZ = UnitVec3::from({0, 0, 1});
const UnitVec3 kDiag = UnitVec3::from({1, 1, 1});

Mat3 eigen_matrix(const Vec3& axis, double angle) {
    const Eigen::Matrix3d r = Eigen::AngleAxisd(angle, test::E(axis).normalized()).toRotationMatrix();
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = r(i, j);
    return m;
}
}  // namespace

TEST_CASE("rodrigues_rotate") {
    CHECK(rodrigues_rotate(kZ, 0.0, {1, 2, 3}) == Vec3{1, 2, 3});
    CHECK_VEC(rodrigues_rotate(kZ, kPi / 2, {1, 0, 0}), Vec3(0, 1, 0), 1e-15);
    CHECK_VEC(rodrigues_rotate(kDiag, 2 * kPi / 3, {1, 0, 0}), Vec3(0, 1, 0), 1e-15);
    auto rng = test::rng_for("rot.rodrigues");
    for (int i = 0; i < 200; ++i) {
        const UnitVec3 a = rng.direction();
        const double t = rng.uniform(-4, 4);
        const Vec3 r = rng.in_box(3);
        CHECK(test::diff(rodrigues_rotate(a, t, r), test::eigen_rotate({}, a.vec(), t, r)) <= 1e-14);
    }
}

TEST_CASE("gibbs_from_axis_angle") {
    CHECK(gibbs_from_axis_angle(kX, 0.0).is_zero());
    CHECK_VEC(gibbs_from_axis_angle(kZ, kPi / 2).q, Vec3(0, 0, 2), 1e-15);
    CHECK_VEC(gibbs_from_axis_angle(kDiag, 2 * kPi / 3).q, Vec3(2, 2, 2), 1e-14);
    try {
        gibbs_from_axis_angle(kZ, kPi);
        FAIL("expected AngleAtPi");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AngleAtPi);
    }
    CHECK_THROWS_AS(gibbs_from_axis_angle(kZ, -kPi + 1e-13), Error);
}

TEST_CASE("axis_angle_from_gibbs") {
    auto [a, t] = axis_angle_from_gibbs(GibbsVector{0, 0, 2});
    CHECK(a.vec() == Vec3{0, 0, 1});
    CHECK(t == doctest::Approx(kPi / 2));
    std::tie(a, t) = axis_angle_from_gibbs(GibbsVector{});
    CHECK(a.vec() == Vec3{0, 0, 1});
    CHECK(t == 0.0);
    std::tie(a, t) = axis_angle_from_gibbs(GibbsVector{2, 2, 2});
    CHECK_VEC(a.vec(), kDiag.vec(), 1e-15);
    CHECK(t == doctest::Approx(2 * kPi / 3));
}

TEST_CASE("matrix_from_gibbs examples") {
    CHECK((matrix_from_gibbs(GibbsVector{}).m - Mat3::identity()).max_abs() == 0.0);
    const Mat3 qz = Mat3::from_rows({0, -1, 0}, {1, 0, 0}, {0, 0, 1});
    CHECK((matrix_from_gibbs(GibbsVector{0, 0, 2}).m - qz).max_abs() <= 1e-15);
    const Mat3 cyc = Mat3::from_rows({0, 0, 1}, {1, 0, 0}, {0, 1, 0});
    CHECK((matrix_from_gibbs(GibbsVector{2, 2, 2}).m - cyc).max_abs() <= 1e-15);
}

TEST_CASE("matrix_from_gibbs matches an independent rotation matrix") {
    auto rng = test::rng_for("rot.matrix");
    for (int i = 0; i < 1000; ++i) {
        const UnitVec3 a = rng.direction();
        const double t = rng.uniform(-kPi + 0.01, kPi - 0.01);
        const Mat3 m = matrix_from_gibbs(gibbs_from_axis_angle(a, t)).m;
        CHECK((m - eigen_matrix(a.vec(), t)).max_abs() <= 1e-12);
        CHECK(is_proper_rotation(m, 1e-12));
        CHECK((matrix_from_axis_angle(a, t).m - m).max_abs() <= 1e-12);
    }
}

TEST_CASE("gibbs_from_matrix") {
    CHECK(gibbs_from_matrix(RotationMatrix{}).is_zero());
    const Mat3 qz = Mat3::from_rows({0, -1, 0}, {1, 0, 0}, {0, 0, 1});
    CHECK_VEC(gibbs_from_matrix({qz}).q, Vec3(0, 0, 2), 1e-15);
    try {
        gibbs_from_matrix({Mat3::from_rows({1, 0, 0}, {0, -1, 0}, {0, 0, -1})});
        FAIL("expected TraceSingular");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TraceSingular);
    }
    auto rng = test::rng_for("rot.roundtrip");
    for (int i = 0; i < 1000; ++i) {
        const GibbsVector q{rng.direction() * rng.uniform(0.0, 100.0)};
        const GibbsVector back = gibbs_from_matrix(matrix_from_gibbs(q));
        CHECK(test::diff(back.q, q.q) <= 1e-9 * std::max(1.0, q.q.norm()));
    }
}

TEST_CASE("apply_displacement") {
    CHECK(apply_displacement({}, {3, 4, 5}) == Vec3{3, 4, 5});
    CHECK_VEC(apply_displacement({GibbsVector{0, 0, 2}, {}}, {1, 0, 0}), Vec3(0, 1, 0), 1e-15);
    CHECK(apply_displacement(Displacement::translation({1, 2, 3}), {7, 7, 7}) == Vec3{8, 9, 10});

    auto rng = test::rng_for("rot.apply");
    for (int i = 0; i < 500; ++i) {
        const UnitVec3 a = rng.direction();
        const double t = rng.uniform(-3.1, 3.1);
        const Displacement d{gibbs_from_axis_angle(a, t), rng.in_box(3)};
        const Vec3 r1 = rng.in_box(2), r2 = rng.in_box(2);
        // Matrix form agreement and distance preservation.
        const auto [m, delta] = matrix_form(d);
        CHECK(test::diff(apply_displacement(d, r1), m * r1 + delta) <= 1e-12);
        CHECK(test::diff(apply_displacement(d, r1), test::eigen_rotate({}, a.vec(), t, r1) + d.delta) <= 1e-12);
        const double before = (r1 - r2).norm();
        const double after = (apply_displacement(d, r1) - apply_displacement(d, r2)).norm();
        CHECK(std::abs(after - before) <= 1e-12 * std::max(1.0, before));
        // The midpoint law: chord = Gamma + q x midpoint.
        const Vec3 chord = apply_displacement(d, r1) - r1;
        CHECK(test::diff(chord, d.gamma() + d.q.q.cross(midpoint_of(d, r1))) <= 1e-11 * std::max(1.0, d.q.q.norm()));
    }
}

TEST_CASE("midpoint_of") {
    CHECK(midpoint_of({}, {1, 2, 3}) == Vec3{1, 2, 3});
    CHECK(midpoint_of(Displacement::translation({2, 0, 0}), {}) == Vec3{1, 0, 0});
    CHECK_VEC(midpoint_of({GibbsVector{0, 0, 2}, {}}, {1, 0, 0}), Vec3(0.5, 0.5, 0), 1e-15);
}

TEST_CASE("displacement_from_rotation and inverse") {
    const Displacement d = displacement_from_rotation({{{1, 0, 0}, kZ}, kPi / 2});
    CHECK_VEC(d.q.q, Vec3(0, 0, 2), 1e-15);
    CHECK_VEC(d.delta, Vec3(1, -1, 0), 1e-15);
    auto rng = test::rng_for("rot.inverse");
    for (int i = 0; i < 200; ++i) {
        const Displacement e{gibbs_from_axis_angle(rng.direction(), rng.uniform(-3, 3)), rng.in_box(3)};
        const Vec3 r = rng.in_box(2);
        CHECK(test::diff(apply_displacement(inverse(e), apply_displacement(e, r)), r) <= 1e-12);
    }
    CHECK_THROWS_AS(displacement_from_rotation({{{}, kZ}, kPi}), Error);
}
