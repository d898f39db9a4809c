#include "screwkit/properties.hpp"

#include "screwkit/compose.hpp"
#include "screwkit/infinitesimal.hpp"
#include "screwkit/motion_io.hpp"
#include "screwkit/oracle.hpp"
#include "screwkit/pointfit.hpp"
#include "screwkit/sampling.hpp"
#include "screwkit/screw.hpp"

#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace screwkit::check {

using sampling::Rng;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Sample = std::function<std::optional<double>(Rng&)>;

struct Property {
    std::string name;
    long nominal;
    double tol;
    Sample sample;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
double dist(const Vec3& a, const Vec3& b) { return (a - b).max_abs(); }
double rel_dist(const Vec3& a, const Vec3& b) { return dist(a, b) / std::max(1.0, b.max_abs()); }
double mat_dist(const Mat3& a, const Mat3& b) { return (a - b).max_abs(); }

Displacement random_displacement(Rng& rng, double max_angle = kPi - 0.01) {
    const UnitVec3 dir = rng.direction();
    const double theta = rng.uniform(-max_angle, max_angle);
    return {gibbs_from_axis_angle(dir, theta), rng.in_box(3.0)};
}

ScrewGeneral random_screw(Rng& rng, double theta) {
    const UnitVec3 dir = rng.direction();
    const Vec3 p = rng.in_box(2.0);
    return {{p - dir.vec() * dir.dot(p), dir}, theta, rng.uniform(-2.0, 2.0)};
}

Rotation random_rotation(Rng& rng, double lo, double hi) {
    return {{rng.in_box(2.0), rng.direction()}, rng.uniform(lo, hi)};
}

Vec3 rotate_about(const Rotation& r, const Vec3& x) {
    return r.line.point + rodrigues_rotate(r.line.dir, r.angle, x - r.line.point);
}

double screw_distance(const Screw& a, const Screw& b) {
    if (a.index() != b.index()) return kInf;
    if (const auto* t = std::get_if<ScrewTranslation>(&a)) return rel_dist(t->t, std::get<ScrewTranslation>(b).t);
    if (std::holds_alternative<ScrewIdentity>(a)) return 0.0;
    const auto& ga = std::get<ScrewGeneral>(a);
    const auto& gb = std::get<ScrewGeneral>(b);
    const double scale = std::max(1.0, gb.axis.point.max_abs());
    return std::max({dist(ga.axis.dir.vec(), gb.axis.dir.vec()), std::abs(ga.theta - gb.theta),
                     dist(ga.axis.point, gb.axis.point) / scale, rel(ga.slide, gb.slide)});
}

std::vector<Property> build_properties() {
    std::vector<Property> ps;

    // ---------------------------------------------------------------- core
    ps.push_back({"core.canonicalize_point_map", 100, 1e-12, [](Rng& rng) -> std::optional<double> {
        const Rotation r{{rng.in_box(2.0), rng.direction()}, rng.uniform(-4 * kPi, 4 * kPi)};
        const Rotation c = canonicalize_rotation(r);
        double err = 0.0;
        for (int i = 0; i < 10; ++i) {
            const Vec3 x = rng.in_box(2.0);
            err = std::max(err, dist(rotate_about(r, x), rotate_about(c, x)));
        }
        return err;
    }});
    ps.push_back({"core.make_unit_idempotent", 1000, 1e-15, [](Rng& rng) -> std::optional<double> {
        const Vec3 v = rng.in_box(10.0);
        if (v.norm() < 1e-6) return std::nullopt;
        const UnitVec3 u = make_unit(v);
        return dist(make_unit(u.vec()).vec(), u.vec());
    }});

    // ---------------------------------------------------------------- rotation
    ps.push_back({"rotation.gibbs_vs_rodrigues", 10000, 1e-10, [](Rng& rng) -> std::optional<double> {
        const UnitVec3 axis = rng.direction();
        const double theta = rng.uniform(-kPi + 0.01, kPi - 0.01);
        const RotationMatrix m = matrix_from_gibbs(gibbs_from_axis_angle(axis, theta));
        double err = 0.0;
        for (int i = 0; i < 10; ++i) {
            const Vec3 r = rng.in_box(2.0);
            err = std::max(err, dist(m * r, rodrigues_rotate(axis, theta, r)));
        }
        return err;
    }});
    ps.push_back({"rotation.gibbs_matrix_roundtrip", 10000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const GibbsVector q{rng.direction() * rng.uniform(0.0, 100.0)};
        const GibbsVector back = gibbs_from_matrix(matrix_from_gibbs(q));
        return dist(back.q, q.q) / std::max(1.0, q.q.norm());
    }});
    ps.push_back({"rotation.orthonormal", 10000, 1e-12, [](Rng& rng) -> std::optional<double> {
        const GibbsVector q{rng.direction() * rng.uniform(0.0, 100.0)};
        const Mat3 m = matrix_from_gibbs(q).m;
        return std::max(mat_dist(m.transpose() * m, Mat3::identity()), std::abs(m.det() - 1.0));
    }});
    ps.push_back({"rotation.rigidity", 10000, 1e-12, [](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        Vec3 x[5], y[5];
        for (int i = 0; i < 5; ++i) {
            x[i] = rng.in_box(2.0);
            y[i] = apply_displacement(d, x[i]);
        }
        double err = 0.0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) err = std::max(err, rel((y[i] - y[j]).norm(), (x[i] - x[j]).norm()));
        return err;
    }});

    // ---------------------------------------------------------------- compose
    ps.push_back({"compose.associativity", 1000, 1e-8, [](Rng& rng) -> std::optional<double> {
        const Displacement d1 = random_displacement(rng), d2 = random_displacement(rng),
                           d3 = random_displacement(rng);
        try {
            const Displacement left = compose_displacements(compose_displacements(d1, d2), d3);
            const Displacement right = compose_displacements(d1, compose_displacements(d2, d3));
            double err = 0.0;
            for (int i = 0; i < 5; ++i) {
                const Vec3 r = rng.in_box(2.0);
                err = std::max(err, rel_dist(apply_displacement(left, r), apply_displacement(right, r)));
            }
            return err;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ResultantHalfTurn) return std::nullopt;
            throw;
        }
    }});
    ps.push_back({"compose.order_sensitivity", 1000, 1e-10, [](Rng& rng) -> std::optional<double> {
        const UnitVec3 a1 = rng.direction(), a2 = rng.direction();
        const double t1 = rng.uniform(0.01, kPi - 0.01), t2 = rng.uniform(0.01, kPi - 0.01);
        const auto [f, tf] = compose_rotation_axes(a1, t1, a2, t2);
        const auto [r, tr] = compose_rotation_axes(a2, t2, a1, t1);
        if (tf > kPi - 1e-6) return std::nullopt;
        const Vec3 n = make_unit(a1.cross(a2)).vec();
        const Vec3 fp = f.vec() - n * n.dot(f.vec());
        const Vec3 rp = r.vec() - n * n.dot(r.vec());
        return std::max({std::abs(tf - tr), dist(fp, rp), std::abs(n.dot(f.vec()) + n.dot(r.vec()))});
    }});
    ps.push_back({"compose.gibbs_vs_matrix", 100000, 1e-9, [](Rng& rng) -> std::optional<double> {
        GibbsVector q1, q2;
        do {
            q1 = GibbsVector{rng.direction() * rng.uniform(0.0, 10.0)};
            q2 = GibbsVector{rng.direction() * rng.uniform(0.0, 10.0)};
        } while (std::abs(1.0 - 0.25 * q1.q.dot(q2.q)) < 1e-3);
        const Mat3 closed = matrix_from_gibbs(compose_gibbs(q1, q2)).m;
        const oracle::HomTransform h = oracle::hom_compose(oracle::hom_from_displacement({q1, {}}),
                                                           oracle::hom_from_displacement({q2, {}}));
        return mat_dist(closed, h.R.m);
    }});
    ps.push_back({"compose.couple_uniformity", 100, 1e-10, [](Rng& rng) -> std::optional<double> {
        const UnitVec3 dir = rng.direction();
        const Rotation r1{{rng.in_box(2.0), dir}, rng.uniform(-kPi, kPi)};
        const Rotation r2{{rng.in_box(2.0), dir}, -r1.angle};
        const Vec3 t = couple_translation({dir, r1.line.point, r2.line.point, r1.angle});
        double err = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Vec3 x = rng.in_box(3.0);
            err = std::max(err, dist(rotate_about(r2, rotate_about(r1, x)) - x, t));
        }
        return err;
    }});
    ps.push_back({"compose.nonintersecting_slide", 10000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const Rotation r1 = random_rotation(rng, 0.01, kPi - 0.01);
        const Rotation r2 = random_rotation(rng, 0.01, kPi - 0.01);
        if (line_distance(r1.line, r2.line) < 1e-3) return std::nullopt;
        const NonintersectingResult res = nonintersecting_pair(r1, r2);
        const Screw o = oracle::screw_from_hom_bruteforce(
            oracle::hom_compose(oracle::hom_from_rotation(r1), oracle::hom_from_rotation(r2)));
        const auto* g = std::get_if<ScrewGeneral>(&o);
        if (g == nullptr || g->theta > kPi - 1e-6) return std::nullopt;
        return std::max(rel(res.slide, g->slide), screw_distance(res.screw, o));
    }});

    // ---------------------------------------------------------------- screw
    ps.push_back({"screw.projection_constancy", 1000, 1e-10, [](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        const Vec3 a = make_unit(d.q.q).vec();
        double lo = kInf, hi = -kInf;
        for (int i = 0; i < 20; ++i) {
            const Vec3 r = rng.in_box(2.0);
            const double v = (apply_displacement(d, r) - r).dot(a);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi - lo;
    }});
    ps.push_back({"screw.norm_law", 1000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        const auto g = std::get<ScrewGeneral>(screw_from_displacement(d));
        const Vec3 r = rng.in_box(2.0);
        const Vec3 chord = apply_displacement(d, r) - r;
        const double u = g.axis.distance_to(r + 0.5 * chord);
        const double tn = std::tan(0.5 * g.theta);
        const double lhs = chord.norm2();
        return std::abs(lhs - (g.slide * g.slide + 4.0 * u * u * tn * tn)) / std::max(1.0, lhs);
    }});
    ps.push_back({"screw.minimality", 1000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        const auto g = std::get<ScrewGeneral>(screw_from_displacement(d));
        const double t = std::abs(g.slide);
        double err = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Vec3 r = rng.in_box(2.0);
            const double len = (apply_displacement(d, r) - r).norm();
            err = std::max(err, t - len);
            if (g.axis.distance_to(r) > 1e-3 && !(len > t)) err = kInf;
        }
        const Vec3 on = g.axis.point + rng.uniform(-2.0, 2.0) * g.axis.dir;
        return std::max(err, std::abs((apply_displacement(d, on) - on).norm() - t));
    }});
    ps.push_back({"screw.midpoint_property", 1000, 0.0, [](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        const auto g = std::get<ScrewGeneral>(screw_from_displacement(d));
        const Vec3 r = rng.in_box(2.0);
        const Vec3 chord = apply_displacement(d, r) - r;
        int best = 0;
        double best_d = kInf;
        for (int k = 0; k <= 100; ++k) {
            const double dd = g.axis.distance_to(r + (k / 100.0) * chord);
            if (dd < best_d) {
                best_d = dd;
                best = k;
            }
        }
        return std::abs(best - 50) <= 1 ? 0.0 : kInf;
    }});
    ps.push_back({"screw.chasles_roundtrip", 10000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const ScrewGeneral s = random_screw(rng, rng.uniform(0.01, kPi - 0.01));
        return screw_distance(screw_from_displacement(displacement_from_screw(s)), s);
    }});
    ps.push_back({"screw.conjugate_invariant", 10000, 1e-9, [](Rng& rng) -> std::optional<double> {
        ScrewGeneral s = random_screw(rng, rng.uniform(0.01, kPi));
        s.slide = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.1, 3.0);
        const ConjugatePair pair = conjugate_pair_decompose(s, rng.uniform(0.05, kPi - 0.05),
                                                            rng.uniform(0.0, 2 * kPi));
        const InvariantSides sides = conjugate_invariant(pair.line_a, pair.line_b);
        double err = std::abs(sides.lhs - sides.rhs) / std::max(1.0, std::abs(s.slide));
        for (int i = 0; i < 5; ++i) {
            const Vec3 x = rng.in_box(2.0);
            err = std::max(err, rel_dist(rotate_about(pair.line_b, rotate_about(pair.line_a, x)),
                                         apply_screw(s, x)));
        }
        return err;
    }});

    // ---------------------------------------------------------------- pointfit
    const auto random_triangle = [](Rng& rng, Vec3 (&p)[3]) {
        do {
            for (auto& x : p) x = rng.in_box(2.0);
        } while ((p[1] - p[0]).cross(p[2] - p[0]).norm() < 0.1);
    };
    ps.push_back({"pointfit.roundtrip", 10000, 1e-8, [=](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        Vec3 p[3];
        random_triangle(rng, p);
        const Displacement f = fit_displacement({p[0], apply_displacement(d, p[0])},
                                                {p[1], apply_displacement(d, p[1])},
                                                {p[2], apply_displacement(d, p[2])});
        return std::max(dist(f.q.q, d.q.q) / std::max(1.0, d.q.q.norm()), rel_dist(f.delta, d.delta));
    }});
    ps.push_back({"pointfit.fourth_point", 10000, 1e-8, [=](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        Vec3 p[3];
        random_triangle(rng, p);
        const Displacement f = fit_displacement({p[0], apply_displacement(d, p[0])},
                                                {p[1], apply_displacement(d, p[1])},
                                                {p[2], apply_displacement(d, p[2])});
        const Vec3 x = rng.in_box(2.0);
        return rel_dist(apply_displacement(f, x), apply_displacement(d, x));
    }});
    ps.push_back({"pointfit.elimination_agreement", 1000, 1e-10, [=](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng, 2.5);
        Vec3 p[3];
        random_triangle(rng, p);
        const Correspondence c0{p[0], apply_displacement(d, p[0])}, c1{p[1], apply_displacement(d, p[1])},
            c2{p[2], apply_displacement(d, p[2])};
        const Displacement a = fit_displacement(c0, c1, c2);
        const Displacement b = fit_displacement_elimination(c0, c1, c2);
        return std::max(dist(a.q.q, b.q.q) / std::max(1.0, a.q.q.norm()), rel_dist(a.delta, b.delta));
    }});
    ps.push_back({"pointfit.kabsch_agreement", 1000, 1e-8, [=](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        Vec3 p[3];
        random_triangle(rng, p);
        const std::vector<Correspondence> cs{{p[0], apply_displacement(d, p[0])},
                                             {p[1], apply_displacement(d, p[1])},
                                             {p[2], apply_displacement(d, p[2])}};
        const oracle::HomTransform fit = oracle::hom_from_displacement(fit_displacement(cs[0], cs[1], cs[2]));
        const oracle::HomTransform k = oracle::kabsch_fit(cs);
        return std::max(mat_dist(fit.R.m, k.R.m), rel_dist(fit.d, k.d));
    }});

    // ---------------------------------------------------------------- infinitesimal
    ps.push_back({"infinitesimal.linearization", 1000, 0.5, [](Rng& rng) -> std::optional<double> {
        std::vector<Rotation> base(5);
        for (auto& r : base) r = {{rng.in_box(1.0), rng.direction()}, rng.uniform(-1.0, 1.0)};
        const Vec3 pts[4] = {Vec3::zero(), Vec3::unit_x(), Vec3::unit_y(), Vec3::unit_z()};
        const auto error_at = [&](double eps) {
            Displacement d;
            std::vector<Twist> ts;
            for (const Rotation& r : base) {
                d = compose_displacements(d, displacement_from_rotation({r.line, eps * r.angle}));
                ts.push_back(twist_of_rotation(r.line, eps * r.angle));
            }
            const Twist tw = compose_twists(ts);
            double sum = 0.0;
            for (const Vec3& x : pts) sum += (apply_displacement(d, x) - x - tw.velocity_at(x)).norm2();
            return std::sqrt(sum / 4.0);
        };
        const double e1 = error_at(1e-2), e2 = error_at(5e-3), e3 = error_at(2.5e-3);
        return std::max(std::abs(e1 / e2 - 4.0), std::abs(e2 / e3 - 4.0));
    }});
    ps.push_back({"infinitesimal.virtual_work_bilinear", 1000, 1e-12, [](Rng& rng) -> std::optional<double> {
        std::vector<PointForce> f1(3), f2(3);
        for (auto& f : f1) f = {rng.in_box(2.0), rng.in_box(2.0)};
        for (auto& f : f2) f = {rng.in_box(2.0), rng.in_box(2.0)};
        std::vector<PointForce> both = f1;
        both.insert(both.end(), f2.begin(), f2.end());
        const Twist t1{rng.in_box(1.0), rng.in_box(1.0)}, t2{rng.in_box(1.0), rng.in_box(1.0)};
        const double forces = virtual_work(both, t1) - virtual_work(f1, t1) - virtual_work(f2, t1);
        const double twists = virtual_work(f1, t1 + t2) - virtual_work(f1, t1) - virtual_work(f1, t2);
        return std::max(std::abs(forces), std::abs(twists)) / 10.0;
    }});
    ps.push_back({"infinitesimal.statics_equivalence", 10000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const int n = 1 + rng.index(6);
        std::vector<PointForce> fs(static_cast<std::size_t>(n));
        for (auto& f : fs) f = {rng.in_box(2.0), rng.in_box(2.0)};
        const bool project = rng.uniform() < 0.5;
        if (project) {
            Vec3 net, moment;
            for (const auto& f : fs) net += f.f;
            fs.push_back({Vec3::zero(), -net});
            for (const auto& f : fs) moment += f.at.cross(f.f);
            const Vec3 a = any_orthogonal(UnitVec3::from(moment.norm() > 0 ? moment : Vec3::unit_z())).vec();
            const Vec3 g = -moment.cross(a) / (2.0 * a.norm2());
            fs.push_back({a, g});
            fs.push_back({-a, -g});
        }
        const double tol = 1e-9;
        const bool eq = force_equilibrium(fs, tol);
        bool all_zero = true;
        const Vec3 basis[3] = {Vec3::unit_x(), Vec3::unit_y(), Vec3::unit_z()};
        for (const Vec3& e : basis) {
            all_zero = all_zero && std::abs(virtual_work(fs, {e, {}})) <= tol;
            all_zero = all_zero && std::abs(virtual_work(fs, {{}, e})) <= tol;
        }
        if (eq != all_zero || (project && !eq)) return kInf;
        return 0.0;
    }});
    ps.push_back({"infinitesimal.center_invariance", 1000, 1e-12, [](Rng& rng) -> std::optional<double> {
        const UnitVec3 dir = rng.direction();
        std::vector<AxisLine> lines, slid;
        std::vector<double> thetas;
        for (int i = 0; i < 4; ++i) {
            const Vec3 p = rng.in_box(2.0);
            lines.push_back({p, dir});
            slid.push_back({p + rng.uniform(-5.0, 5.0) * dir, dir});
            thetas.push_back(rng.uniform(0.1, 1.0));
        }
        return dist(parallel_rotation_center(lines, thetas), parallel_rotation_center(slid, thetas));
    }});

    // ---------------------------------------------------------------- oracle
    ps.push_back({"oracle.closed_form_agreement", 100000, 1e-8, [](Rng& rng) -> std::optional<double> {
        const int kind = rng.index(3);
        const double theta = kind == 0 ? 1e-6 : kind == 1 ? kPi - 1e-6 : rng.uniform(0.01, kPi - 0.01);
        ScrewGeneral s = random_screw(rng, theta);
        // A rounded near-identity matrix fixes the axis point only to |slide| eps / theta^2.
        if (kind == 0) s.slide *= theta;
        const Displacement d = displacement_from_screw(s);
        return screw_distance(screw_from_displacement(d),
                              oracle::screw_from_hom_bruteforce(oracle::hom_from_displacement(d)));
    }});
    ps.push_back({"oracle.hom_roundtrip", 10000, 1e-10, [](Rng& rng) -> std::optional<double> {
        const Displacement d = random_displacement(rng);
        const oracle::HomTransform h = oracle::hom_from_displacement(d);
        const Displacement back = oracle::displacement_from_hom(h);
        double err = std::max(dist(back.q.q, d.q.q) / std::max(1.0, d.q.q.norm()), dist(back.delta, d.delta));
        const Vec3 r = rng.in_box(2.0);
        return std::max(err, rel_dist(h.apply(r), apply_displacement(d, r)));
    }});
    ps.push_back({"oracle.compose_agreement", 100000, 1e-9, [](Rng& rng) -> std::optional<double> {
        const Displacement d1 = random_displacement(rng), d2 = random_displacement(rng);
        try {
            const oracle::HomTransform closed = oracle::hom_from_displacement(compose_displacements(d1, d2));
            const oracle::HomTransform h =
                oracle::hom_compose(oracle::hom_from_displacement(d1), oracle::hom_from_displacement(d2));
            return std::max(mat_dist(closed.R.m, h.R.m), rel_dist(closed.d, h.d));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ResultantHalfTurn) return std::nullopt;
            throw;
        }
    }});

    // ---------------------------------------------------------------- cli
    ps.push_back({"cli.parse_print_roundtrip", 1000, 0.0, [](Rng& rng) -> std::optional<double> {
        std::vector<io::MotionRecord> recs;
        const int n = 1 + rng.index(6);
        for (int i = 0; i < n; ++i) {
            io::MotionRecord r;
            if (rng.uniform() < 0.5) {
                r.kind = io::MotionRecord::Kind::Rot;
                r.dir = rng.direction().vec();
                r.point = rng.in_box(5.0);
                r.angle = rng.uniform(-360.0, 360.0);
            } else {
                r.t = rng.in_box(5.0);
            }
            recs.push_back(r);
        }
        std::istringstream in(io::format_motion(recs));
        return io::parse_motion(in) == recs ? 0.0 : kInf;
    }});

    return ps;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, long samples, double tol) {
    const double scale = tol / 1e-9;
    std::vector<PropertyResult> results;
    for (const Property& p : build_properties()) {
        PropertyResult r;
        r.name = p.name;
        // Structural checks (tolerance 0) stay exact; the others scale with --tol.
        r.tol = p.tol == 0.0 ? 0.0 : p.tol * scale;
        if (p.name == "infinitesimal.linearization") r.tol = p.tol;
        const long count = std::max(1L, static_cast<long>(static_cast<double>(p.nominal) * samples / 10000.0));
        for (long i = 0; i < count; ++i) {
            Rng rng(sampling::sample_seed(seed, p.name, static_cast<std::uint64_t>(i)));
            std::optional<double> err;
            try {
                err = p.sample(rng);
            } catch (const std::exception&) {
                err = kInf;
            }
            ++r.samples;
            if (!err) {
                ++r.skipped;
                continue;
            }
            const double e = std::isnan(*err) ? kInf : *err;
            r.max_err = std::max(r.max_err, e);
            if (!(e <= r.tol) && r.first_failure < 0) {
                r.passed = false;
                r.first_failure = i;
            }
        }
        results.push_back(r);
    }
    return results;
}

bool print_report(const std::vector<PropertyResult>& results, std::uint64_t seed, std::ostream& out) {
    bool ok = true;
    for (const PropertyResult& r : results) {
        ok = ok && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " samples=" << r.samples
            << " skipped=" << r.skipped << " max_err=" << fmt(r.max_err) << " tol=" << fmt(r.tol);
        if (!r.passed) out << " first_failure=" << r.first_failure << " seed=" << seed;
        out << "\n";
    }
    out << "summary=" << (ok ? "pass" : "fail") << "\n";
    return ok;
}

}  // namespace screwkit::check
