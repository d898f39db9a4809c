#include "test_support.hpp"

#include "screwkit/compose.hpp"
#include "screwkit/oracle.hpp"
#include "screwkit/screw.hpp"

using namespace screwkit;

namespace {
const UnitVec3 kX = UnitVec3::from({1, 0, 0});
const UnitVec3 kY = UnitVec3::from({0, 1, 0});
const UnitVec3 kZ = UnitVec3::from({0, 0, 1});

Eigen::Matrix3d eig(const Mat3& m) {
    Eigen::Matrix3d e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e(i, j) = m(i, j);
    return e;
}

/// Axis and angle of a matrix, by Eigen.
std::pair<Vec3, double> eigen_axis_angle(const Eigen::Matrix3d& r) {
    const Eigen::AngleAxisd aa(r);
    return {test::V(aa.axis()), aa.angle()};
}

Vec3 rotate_line(const Rotation& r, const Vec3& x) {
    return test::eigen_rotate(r.line.point, r.line.dir.vec(), r.angle, x);
}
}  // namespace

TEST_CASE("compose_gibbs examples") {
    const GibbsVector q{0.3, -1.2, 0.7};
    CHECK(compose_gibbs(q, GibbsVector{}) == q);
    const double a = 0.8, b = 1.1;
    CHECK_VEC(compose_gibbs(GibbsVector{0, 0, a}, GibbsVector{0, 0, b}).q,
              Vec3(0, 0, (a + b) / (1 - a * b / 4)), 1e-15);
    // Same-axis tangent addition.
    const double al = 0.9, be = 1.3;
    CHECK(compose_gibbs(gibbs_from_axis_angle(kZ, al), gibbs_from_axis_angle(kZ, be)).q.z ==
          doctest::Approx(2 * std::tan((al + be) / 2)).epsilon(1e-13));
    CHECK_VEC(compose_gibbs(GibbsVector{2, 0, 0}, GibbsVector{0, 2, 0}).q, Vec3(2, 2, -2), 1e-15);
}

TEST_CASE("compose_gibbs half-turn denominator") {
    try {
        compose_gibbs(GibbsVector{2, 0, 0}, GibbsVector{2, 0, 0});
        FAIL("expected ResultantHalfTurn");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResultantHalfTurn);
    }
}

TEST_CASE("compose_gibbs matches the matrix product (q1 first)") {
    auto rng = test::rng_for("compose.gibbs");
    for (int i = 0; i < 2000; ++i) {
        const GibbsVector q1{rng.direction() * rng.uniform(0, 10)};
        const GibbsVector q2{rng.direction() * rng.uniform(0, 10)};
        if (std::abs(1 - q1.q.dot(q2.q) / 4) < 1e-3) continue;
        const Eigen::Matrix3d expect = eig(matrix_from_gibbs(q2).m) * eig(matrix_from_gibbs(q1).m);
        CHECK((eig(matrix_from_gibbs(compose_gibbs(q1, q2)).m) - expect).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("resultant_trig examples") {
    CHECK(resultant_trig(kPi / 2, kPi / 2, kPi / 2).angle == doctest::Approx(2 * kPi / 3));
    CHECK(resultant_trig(0.7, 1.1, 0.0).angle == doctest::Approx(1.8));
    CHECK(resultant_trig(0.7, 0.0, 1.3).angle == doctest::Approx(0.7));
    const ResultantTrig t = resultant_trig(0.7, 0.0, 1.3);
    CHECK_VEC(t.cosines, Vec3(1, 0, 0), 1e-15);
}

TEST_CASE("resultant_trig component equations and oracle agreement") {
    auto rng = test::rng_for("compose.trig");
    for (int i = 0; i < 1000; ++i) {
        const double t1 = rng.uniform(0.01, kPi - 0.01), t2 = rng.uniform(0.01, kPi - 0.01);
        const double nu = rng.uniform(0, kPi);
        const ResultantTrig r = resultant_trig(t1, t2, nu);
        const double s1 = std::sin(t1 / 2), c1 = std::cos(t1 / 2), s2 = std::sin(t2 / 2), c2 = std::cos(t2 / 2);
        // Component equations on the uncanonicalized half-angle vector.
        CHECK(r.half_cos == doctest::Approx(c1 * c2 - s1 * s2 * std::cos(nu)).epsilon(1e-12));
        CHECK_VEC(r.half_sin_axis, Vec3(s1 * c2 + s2 * c1 * std::cos(nu), s2 * c1 * std::sin(nu), -s1 * s2 * std::sin(nu)), 1e-14);
        // Matrix oracle: rotate about x, then about (cos nu, sin nu, 0).
        const Eigen::Matrix3d m = Eigen::AngleAxisd(t2, Eigen::Vector3d(std::cos(nu), std::sin(nu), 0)).toRotationMatrix() *
                                  Eigen::AngleAxisd(t1, Eigen::Vector3d::UnitX()).toRotationMatrix();
        const auto [axis, angle] = eigen_axis_angle(m);
        CHECK(r.angle == doctest::Approx(angle).epsilon(1e-9));
        if (angle < kPi - 1e-6) CHECK(test::diff(r.cosines, axis) <= 1e-9);
    }
}

TEST_CASE("order_swap_axis") {
    const auto [f, r] = order_swap_axis(kPi / 2, kPi / 2, kPi / 2);
    CHECK_VEC(f.vec(), make_unit({1, 1, -1}).vec(), 1e-15);
    CHECK_VEC(r.vec(), make_unit({1, 1, 1}).vec(), 1e-15);
    const auto [f0, r0] = order_swap_axis(0.4, 0.9, 0.0);
    CHECK_VEC(f0.vec(), r0.vec(), 1e-15);
    const double e = 1e-4;
    const auto [fs, rs] = order_swap_axis(e, 2 * e, 1.0);
    CHECK(test::diff(fs.vec(), rs.vec()) <= 10 * e);

    auto rng = test::rng_for("compose.swap");
    for (int i = 0; i < 500; ++i) {
        const double t1 = rng.uniform(0.01, 3.1), t2 = rng.uniform(0.01, 3.1), nu = rng.uniform(0.01, 3.1);
        const auto [a, b] = order_swap_axis(t1, t2, nu);
        CHECK(a.x() == doctest::Approx(b.x()).epsilon(1e-12));
        CHECK(a.y() == doctest::Approx(b.y()).epsilon(1e-12));
        CHECK(a.z() == doctest::Approx(-b.z()).epsilon(1e-12));
        const auto ab = compose_rotation_axes(kX, t1, kY, t2);
        const auto ba = compose_rotation_axes(kY, t2, kX, t1);
        CHECK(ab.second == doctest::Approx(ba.second).epsilon(1e-12));
    }
}

TEST_CASE("sine_proportionality") {
    const SineProportionality s = sine_proportionality(kPi / 2, kPi / 2, kPi / 2);
    CHECK(s.sin_g == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(s.sin_h_prime == doctest::Approx(std::sqrt(2.0 / 3.0)));
    const SineProportionality sym = sine_proportionality(1.1, 1.1, 0.6);
    CHECK(sym.sin_g == doctest::Approx(sym.sin_h_prime));
    CHECK(sine_proportionality(1.1, 0.0, 0.6).sin_g == 0.0);
    try {
        sine_proportionality(1.0, 1.0, kPi);
        FAIL("expected DegenerateResultant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateResultant);
    }
    // Against angles measured in the matrix oracle.
    auto rng = test::rng_for("compose.sines");
    for (int i = 0; i < 300; ++i) {
        const double t1 = rng.uniform(0.1, 3.0), t2 = rng.uniform(0.1, 3.0), nu = rng.uniform(0.1, 3.0);
        const Eigen::Vector3d a2(std::cos(nu), std::sin(nu), 0);
        const Eigen::Matrix3d m = Eigen::AngleAxisd(t2, a2).toRotationMatrix() *
                                  Eigen::AngleAxisd(t1, Eigen::Vector3d::UnitX()).toRotationMatrix();
        const Eigen::AngleAxisd aa(m);
        const SineProportionality sp = sine_proportionality(t1, t2, nu);
        CHECK(sp.sin_g == doctest::Approx(aa.axis().cross(Eigen::Vector3d::UnitX()).norm()).epsilon(1e-9));
        CHECK(sp.sin_h_prime == doctest::Approx(aa.axis().cross(a2).norm()).epsilon(1e-9));
        CHECK(sp.sin_g / std::sin(t2 / 2) == doctest::Approx(sp.sin_h_prime / std::sin(t1 / 2)).epsilon(1e-12));
    }
}

TEST_CASE("compose_displacements") {
    const Displacement d{GibbsVector{0.2, 0.1, -0.4}, {1, 2, 3}};
    const Displacement id = compose_displacements({}, d);
    CHECK(id.q == d.q);
    CHECK(id.delta == d.delta);
    const Displacement tt = compose_displacements(Displacement::translation({1, 2, 3}), Displacement::translation({-4, 0, 1}));
    CHECK(tt.q.is_zero());
    CHECK(tt.delta == Vec3{-3, 2, 4});
    const Displacement xy = compose_displacements(displacement_from_rotation({{{}, kX}, kPi / 2}),
                                                  displacement_from_rotation({{{}, kY}, kPi / 2}));
    CHECK_VEC(xy.q.q, Vec3(2, 2, -2), 1e-15);
    CHECK_VEC(xy.delta, Vec3(), 1e-15);

    auto rng = test::rng_for("compose.disp");
    for (int i = 0; i < 500; ++i) {
        const Displacement a{GibbsVector{rng.direction() * rng.uniform(0, 5)}, rng.in_box(3)};
        const Displacement b{GibbsVector{rng.direction() * rng.uniform(0, 5)}, rng.in_box(3)};
        const Displacement c = compose_displacements(a, b);
        CHECK(c.delta == apply_displacement(b, a.delta));
        const Vec3 r = rng.in_box(2);
        CHECK(test::diff(apply_displacement(c, r), apply_displacement(b, apply_displacement(a, r))) <= 1e-9);
    }
    // Exact half-turn resultants cannot be stored as a Gibbs vector.
    try {
        compose_displacements({GibbsVector{2, 0, 0}, {}}, {GibbsVector{2, 0, 0}, {}});
        FAIL("expected ResultantHalfTurn");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResultantHalfTurn);
    }
}

TEST_CASE("nonintersecting_pair example") {
    const Rotation first{{{}, kX}, kPi / 2};
    const Rotation second{{{0, 0, 1}, kY}, kPi / 2};
    const NonintersectingResult r = nonintersecting_pair(first, second);
    const auto& g = std::get<ScrewGeneral>(r.screw);
    CHECK(g.theta == doctest::Approx(2 * kPi / 3));
    CHECK_VEC(g.axis.dir.vec(), make_unit({1, 1, -1}).vec(), 1e-15);
    CHECK(std::abs(r.slide) == doctest::Approx(2 / std::sqrt(3.0)));
    CHECK(r.distance == doctest::Approx(1.0));
    CHECK(r.nu == doctest::Approx(kPi / 2));
    // Frame origin image for u = 1, nu = pi/2, theta2 = pi/2.
    CHECK_VEC(r.frame_delta, Vec3(-1, 0, 1), 1e-15);
}

TEST_CASE("nonintersecting_pair limits and errors") {
    const Rotation first{{{}, kX}, 1.0};
    // Second rotation vanishes: the screw is the first rotation.
    const NonintersectingResult r = nonintersecting_pair(first, {{{0, 0, 2}, kY}, 0.0});
    const auto& g = std::get<ScrewGeneral>(r.screw);
    CHECK(g.theta == doctest::Approx(1.0));
    CHECK(std::abs(r.slide) <= 1e-15);
    CHECK_VEC(g.axis.dir.vec(), kX.vec(), 1e-15);
    // Shrinking separation drives the slide to zero.
    const double t_small = nonintersecting_pair(first, {{{0, 0, 1e-6}, kY}, 1.0}).slide;
    const double t_big = nonintersecting_pair(first, {{{0, 0, 1}, kY}, 1.0}).slide;
    CHECK(std::abs(t_small) == doctest::Approx(std::abs(t_big) * 1e-6).epsilon(1e-9));
    try {
        nonintersecting_pair(first, {{{0, 0, 0}, kY}, 1.0});
        FAIL("expected IntersectingAxes");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IntersectingAxes);
    }
    // Coincident identity: axes parallel and opposite with equal angles make a couple.
    const NonintersectingResult couple = nonintersecting_pair({{{}, kZ}, 0.5}, {{{1, 0, 0}, kZ}, -0.5});
    CHECK(std::holds_alternative<ScrewTranslation>(couple.screw));
    try {
        nonintersecting_pair({{{}, kZ}, 0.0}, {{{1, 0, 0}, kZ}, 0.0});
        FAIL("expected DegenerateResultant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateResultant);
    }
}

TEST_CASE("nonintersecting_pair matches the composed displacement") {
    auto rng = test::rng_for("compose.skew");
    for (int i = 0; i < 1000; ++i) {
        const Rotation a{{rng.in_box(2), rng.direction()}, rng.uniform(0.01, 3.1)};
        const Rotation b{{rng.in_box(2), rng.direction()}, rng.uniform(0.01, 3.1)};
        if (line_distance(a.line, b.line) < 1e-3) continue;
        const NonintersectingResult r = nonintersecting_pair(a, b);
        const auto& g = std::get<ScrewGeneral>(r.screw);
        // Point action against the independent two-rotation evaluation.
        for (int k = 0; k < 3; ++k) {
            const Vec3 x = rng.in_box(2);
            CHECK(test::diff(apply_screw(r.screw, x), rotate_line(b, rotate_line(a, x))) <= 1e-9);
        }
        CHECK(std::abs(g.axis.point.dot(g.axis.dir.vec())) <= 1e-9);
        // Magnitude of the slide from the closed formula.
        const double expect = 2 * r.distance * std::sin(r.nu) * std::sin(a.angle / 2) * std::sin(b.angle / 2) /
                              std::sin(g.theta / 2);
        CHECK(std::abs(r.slide) == doctest::Approx(expect).epsilon(1e-9));
        CHECK(r.slide == g.slide);
    }
}

TEST_CASE("three_axis_resultant") {
    CHECK(three_axis_resultant(kPi / 2, kPi / 2, kPi / 2).angle == doctest::Approx(kPi));
    CHECK(three_axis_resultant(0.8, 0, 0).angle == doctest::Approx(0.8));
    const double e = 1e-4;
    CHECK(three_axis_resultant(e, e, e).angle == doctest::Approx(e * std::sqrt(3.0)).epsilon(1e-8));
    CHECK(std::isnan(three_axis_resultant(0, 0, 0).sin2_g));

    auto rng = test::rng_for("compose.three");
    int printed_form_mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        const double tx = rng.uniform(-3, 3), ty = rng.uniform(-3, 3), tz = rng.uniform(-3, 3);
        // z first, then y, then x.
        const Eigen::Matrix3d m = Eigen::AngleAxisd(tx, Eigen::Vector3d::UnitX()).toRotationMatrix() *
                                  Eigen::AngleAxisd(ty, Eigen::Vector3d::UnitY()).toRotationMatrix() *
                                  Eigen::AngleAxisd(tz, Eigen::Vector3d::UnitZ()).toRotationMatrix();
        const Eigen::AngleAxisd aa(m);
        const ThreeAxisResultant r = three_axis_resultant(tx, ty, tz);
        if (aa.angle() < 1e-3 || aa.angle() > kPi - 1e-3) continue;
        CHECK(r.angle == doctest::Approx(aa.angle()).epsilon(1e-10));
        const Eigen::Vector3d ax = aa.axis();
        CHECK(r.sin2_g == doctest::Approx(1 - ax.x() * ax.x()).epsilon(1e-9));
        CHECK(r.sin2_l == doctest::Approx(1 - ax.z() * ax.z()).epsilon(1e-9));
        CHECK(r.sin2_h_exact == doctest::Approx(1 - ax.y() * ax.y()).epsilon(1e-9));
        if (std::abs(r.sin2_h - (1 - ax.y() * ax.y())) > 1e-6) ++printed_form_mismatches;
    }
    // The printed half-angle cross term does not reproduce the composition.
    CHECK(printed_form_mismatches > 100);
}

TEST_CASE("couple_translation") {
    const Couple c{kZ, {0, 0, 0}, {1, 0, 0}, kPi / 2};
    const Vec3 t = couple_translation(c);
    CHECK_VEC(t, Vec3(1, 1, 0), 1e-15);
    CHECK(t.norm() == doctest::Approx(std::sqrt(2.0)));
    CHECK(couple_translation({kZ, {0, 0, 0}, {1, 0, 0}, 0.0}) == Vec3{});
    const double th = 1e-5;
    const Vec3 small = couple_translation({kZ, {0, 0, 0}, {1, 0, 0}, th});
    CHECK(test::diff(small, Vec3(0, th, 0)) <= th * th);

    auto rng = test::rng_for("compose.couple");
    for (int i = 0; i < 100; ++i) {
        const UnitVec3 dir = rng.direction();
        const Couple cc{dir, rng.in_box(2), rng.in_box(2), rng.uniform(-3, 3)};
        const Vec3 tt = couple_translation(cc);
        const Vec3 w = cc.point2 - cc.point1;
        const double d = (w - dir.vec() * dir.dot(w)).norm();
        CHECK(tt.norm() == doctest::Approx(2 * d * std::abs(std::sin(cc.theta / 2))).epsilon(1e-10));
        for (int k = 0; k < 20; ++k) {
            const Vec3 x = rng.in_box(3);
            const Vec3 y = test::eigen_rotate(cc.point2, dir.vec(), -cc.theta, test::eigen_rotate(cc.point1, dir.vec(), cc.theta, x));
            CHECK(test::diff(y - x, tt) <= 1e-10);
        }
    }
}

TEST_CASE("translation_as_couple") {
    const Couple c = translation_as_couple({0, 0, 2}, kPi / 2, 0.0);
    CHECK_VEC(couple_translation(c), Vec3(0, 0, 2), 1e-10);
    CHECK(c.point1 == Vec3{});
    const Vec3 w = c.point2 - c.point1;
    CHECK((w - c.dir.vec() * c.dir.dot(w)).norm() == doctest::Approx(std::sqrt(2.0)));
    const Couple c2 = translation_as_couple({0, 0, 2}, kPi / 2, 1.0);
    CHECK(test::diff(c.dir.vec(), c2.dir.vec()) > 0.1);
    CHECK_VEC(couple_translation(c2), Vec3(0, 0, 2), 1e-10);
    CHECK_VEC(couple_translation(translation_as_couple({3, 0, 0}, 1.0, 0.3)), Vec3(3, 0, 0), 1e-10);
    try {
        translation_as_couple({}, 1.0, 0.0);
        FAIL("expected ZeroTranslation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroTranslation);
    }
    CHECK_THROWS_AS(translation_as_couple({1, 0, 0}, 1e-7, 0.0), Error);
    CHECK_THROWS_AS(translation_as_couple({1, 0, 0}, kPi, 0.0), Error);
}
