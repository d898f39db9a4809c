#include "test_support.hpp"

using namespace screwkit;

TEST_CASE("make_unit") {
    CHECK(make_unit({0, 0, 5}).vec() == Vec3{0, 0, 1});
    CHECK(make_unit({1, 0, 0}).vec() == Vec3{1, 0, 0});
    try {
        make_unit({0, 0, 0});
        FAIL("expected ZeroVector");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroVector);
    }
    CHECK_THROWS_AS(make_unit({1e-13, 0, 0}), Error);
}

TEST_CASE("make_unit is idempotent") {
    auto rng = test::rng_for("core.idem");
    for (int i = 0; i < 1000; ++i) {
        const UnitVec3 u = make_unit(rng.in_box(10.0));
        CHECK(test::diff(make_unit(u.vec()).vec(), u.vec()) <= 1e-15);
        CHECK(std::abs(u.vec().norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("cross product is right-handed") {
    CHECK(Vec3::unit_x().cross(Vec3::unit_y()) == Vec3::unit_z());
    CHECK(Vec3::unit_y().cross(Vec3::unit_z()) == Vec3::unit_x());
    CHECK(triple(Vec3::unit_x(), Vec3::unit_y(), Vec3::unit_z()) == 1.0);
}

TEST_CASE("canonicalize_rotation examples") {
    const UnitVec3 z = UnitVec3::from({0, 0, 1});
    Rotation r = canonicalize_rotation({{Vec3::zero(), z}, -kPi / 2});
    CHECK(r.line.dir.vec() == Vec3{0, 0, -1});
    CHECK(r.angle == doctest::Approx(kPi / 2));

    r = canonicalize_rotation({{Vec3::zero(), z}, kPi / 2});
    CHECK(r.line.dir.vec() == Vec3{0, 0, 1});
    CHECK(r.angle == kPi / 2);

    r = canonicalize_rotation({{Vec3::zero(), -z}, kPi});
    CHECK(r.line.dir.vec() == Vec3{0, 0, 1});
    CHECK(r.angle == kPi);

    r = canonicalize_rotation({{Vec3::zero(), z}, -kPi});
    CHECK(r.line.dir.vec() == Vec3{0, 0, 1});
    CHECK(r.angle == kPi);
}

TEST_CASE("canonicalize_rotation preserves the point map") {
    auto rng = test::rng_for("core.canon");
    for (int i = 0; i < 100; ++i) {
        const Rotation r{{rng.in_box(2.0), rng.direction()}, rng.uniform(-4 * kPi, 4 * kPi)};
        const Rotation c = canonicalize_rotation(r);
        CHECK(c.angle >= 0.0);
        CHECK(c.angle <= kPi);
        for (int k = 0; k < 10; ++k) {
            const Vec3 x = rng.in_box(2.0);
            const Vec3 a = test::eigen_rotate(r.line.point, r.line.dir.vec(), r.angle, x);
            const Vec3 b = test::eigen_rotate(c.line.point, c.line.dir.vec(), c.angle, x);
            CHECK(test::diff(a, b) <= 1e-12);
        }
    }
}

TEST_CASE("wrap_angle") {
    CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == kPi);
    CHECK(wrap_angle(2 * kPi + 0.5) == doctest::Approx(0.5));
}

TEST_CASE("tolerance") {
    const Tolerance t;
    CHECK(t.close(1.0, 1.0 + 1e-10));
    CHECK_FALSE(t.close(1.0, 1.0 + 1e-6));
    const Tolerance tight{1e-15, 0.0};
    CHECK_FALSE(tight.close(1.0, 1.0 + 1e-10));
}

TEST_CASE("lines") {
    const AxisLine l{{1, 2, 3}, UnitVec3::from({0, 0, 1})};
    CHECK(l.foot_of({5, 2, 7}) == Vec3{1, 2, 7});
    CHECK(l.distance_to({5, 2, 7}) == doctest::Approx(4.0));
    CHECK(l.normalized().point == Vec3{1, 2, 0});
    const AxisLine x{{0, 0, 0}, UnitVec3::from({1, 0, 0})};
    const AxisLine y{{0, 0, 2}, UnitVec3::from({0, 1, 0})};
    CHECK(line_distance(x, y) == doctest::Approx(2.0));
    const AxisLine xp{{0, 3, 4}, UnitVec3::from({-1, 0, 0})};
    CHECK(line_distance(x, xp) == doctest::Approx(5.0));
}

TEST_CASE("solve3 and matrix helpers") {
    const Mat3 m = Mat3::from_rows({2, 1, 0}, {1, 3, 1}, {0, 1, 4});
    const Vec3 x = solve3(m, {1, 2, 3});
    CHECK(test::diff(m * x, {1, 2, 3}) <= 1e-14);
    CHECK_THROWS_AS(solve3(Mat3{}, {1, 0, 0}), Error);
    CHECK(Mat3::skew({1, 2, 3}) * Vec3{4, 5, 6} == Vec3{1, 2, 3}.cross({4, 5, 6}));
}
