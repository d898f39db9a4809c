#include "screwkit/commands.hpp"

#include "screwkit/compose.hpp"
#include "screwkit/oracle.hpp"
#include "screwkit/pointfit.hpp"
#include "screwkit/properties.hpp"
#include "screwkit/screw.hpp"

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

namespace screwkit::cli {

namespace {

std::string num(double v) {
    if (std::abs(v) < 1e-13) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string vec(const Vec3& v) { return num(v.x) + "," + num(v.y) + "," + num(v.z); }

double out_angle(double radians, const Options& opt) { return opt.radians ? radians : radians * 180.0 / kPi; }
double in_angle(double value, const Options& opt) { return opt.radians ? value : value * kPi / 180.0; }

void print_screw(const Screw& s, const Options& opt, std::ostream& out) {
    if (std::holds_alternative<ScrewIdentity>(s)) {
        out << "screw.type=identity\n";
    } else if (const auto* t = std::get_if<ScrewTranslation>(&s)) {
        out << "screw.type=translation\n" << "translation=" << vec(t->t) << "\n";
    } else {
        const auto& g = std::get<ScrewGeneral>(s);
        out << "screw.type=general\n"
            << "axis.point=" << vec(g.axis.point) << "\n"
            << "axis.dir=" << vec(g.axis.dir.vec()) << "\n"
            << "angle=" << num(out_angle(g.theta, opt)) << "\n"
            << "slide=" << num(g.slide) << "\n";
    }
}

void print_rotation(const std::string& key, const Rotation& r, const Options& opt, std::ostream& out) {
    out << key << ".point=" << vec(r.line.point) << "\n"
        << key << ".dir=" << vec(r.line.dir.vec()) << "\n"
        << key << ".angle=" << num(out_angle(r.angle, opt)) << "\n";
}

/// Closed-form composition; empty when a Gibbs vector would overflow.
std::optional<Displacement> compose_closed(const std::vector<io::MotionRecord>& records, const Options& opt) {
    Displacement d;
    try {
        for (const io::MotionRecord& r : records) {
            const Displacement step = r.kind == io::MotionRecord::Kind::Rot
                                          ? displacement_from_rotation(io::to_rotation(r, opt.radians))
                                          : Displacement::translation(r.t);
            d = compose_displacements(d, step);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::AngleAtPi || e.code() == ErrorCode::ResultantHalfTurn) return std::nullopt;
        throw;
    }
    return d;
}

oracle::HomTransform compose_matrix(const std::vector<io::MotionRecord>& records, const Options& opt) {
    oracle::HomTransform h = oracle::hom_from_translation(Vec3::zero());
    for (const io::MotionRecord& r : records) {
        h = oracle::hom_compose(h, r.kind == io::MotionRecord::Kind::Rot
                                       ? oracle::hom_from_rotation(io::to_rotation(r, opt.radians))
                                       : oracle::hom_from_translation(r.t));
    }
    return h;
}

Screw classify(Screw s, double tol) {
    if (const auto* t = std::get_if<ScrewTranslation>(&s)) {
        if (t->t.norm() <= tol) return ScrewIdentity{};
    }
    return s;
}

}  // namespace

int cmd_compose(const std::vector<io::MotionRecord>& records, const Options& opt, std::ostream& out) {
    if (const auto d = compose_closed(records, opt)) {
        print_screw(classify(screw_from_displacement(*d), opt.tol), opt, out);
        out << "q=" << vec(d->q.q) << "\n" << "delta=" << vec(d->delta) << "\n";
        return kOk;
    }
    const oracle::HomTransform h = compose_matrix(records, opt);
    out << "error=GibbsOverflow\n"
        << "message=a half-turn has no Gibbs vector; screw from the matrix form follows\n";
    print_screw(classify(oracle::screw_from_hom_bruteforce(h), opt.tol), opt, out);
    out << "delta=" << vec(h.d) << "\n";
    return kGibbsOverflow;
}

int cmd_decompose(const std::vector<io::MotionRecord>& records, double theta_b, double psi,
                  const Options& opt, std::ostream& out) {
    const auto d = compose_closed(records, opt);
    const Screw s = classify(d ? screw_from_displacement(*d)
                               : oracle::screw_from_hom_bruteforce(compose_matrix(records, opt)),
                             opt.tol);
    print_screw(s, opt, out);
    const auto* g = std::get_if<ScrewGeneral>(&s);
    if (g == nullptr || std::abs(g->slide) <= opt.tol) {
        out << "decomposition=degenerate\n"
            << (g == nullptr ? "message=no rotation: the motion has no central axis to decompose\n"
                             : "message=zero slide: the motion is a single rotation; its conjugate axis lies at infinity\n");
        return kDegenerateDecomposition;
    }
    const ConjugatePair pair = conjugate_pair_decompose(s, in_angle(theta_b, opt), in_angle(psi, opt));
    const InvariantSides sides = conjugate_invariant(pair.line_a, pair.line_b);
    out << "decomposition=pair\n";
    print_rotation("line_a", pair.line_a, opt, out);
    print_rotation("line_b", pair.line_b, opt, out);
    out << "invariant.lhs=" << num(sides.lhs) << "\n"
        << "invariant.rhs=" << num(sides.rhs) << "\n"
        << "invariant.diff=" << num(sides.lhs - sides.rhs) << "\n";
    return kOk;
}

int cmd_fit(const std::vector<Correspondence>& corrs, const Options& opt, std::ostream& out) {
    if (corrs.size() < 3) {
        out << "error=parse\nmessage=at least three correspondences are required\n";
        return kParseError;
    }
    int code = kOk;
    try {
        const Displacement d = fit_displacement(corrs[0], corrs[1], corrs[2]);
        out << "q=" << vec(d.q.q) << "\n" << "delta=" << vec(d.delta) << "\n";
        print_screw(classify(screw_from_displacement(d), opt.tol), opt, out);
        double resid = 0.0;
        for (const Correspondence& c : corrs) resid = std::max(resid, (apply_displacement(d, c.before) - c.after).norm());
        out << "residual.max=" << num(resid) << "\n";
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::CollinearPoints:
                out << "error=CollinearPoints\nmessage=" << e.what() << "\n";
                return kCollinear;
            case ErrorCode::NonRigidData:
                out << "error=NonRigidData\nmessage=" << e.what() << "\n";
                return kNonRigid;
            case ErrorCode::TraceSingular: {
                const oracle::HomTransform h = oracle::kabsch_fit(corrs);
                out << "error=GibbsOverflow\n"
                    << "message=fitted rotation is a half-turn; screw from the matrix form follows\n";
                print_screw(classify(oracle::screw_from_hom_bruteforce(h), opt.tol), opt, out);
                code = kGibbsOverflow;
                break;
            }
            default:
                throw;
        }
    }
    if (corrs.size() < 4) {
        out << "rigidity=unchecked\n";
        return code;
    }
    const RigidityReport rep = check_rigidity(corrs);
    out << "rigid=" << (rep.rigid ? "true" : "false") << "\n"
        << "proper=" << (rep.proper ? (*rep.proper ? "true" : "false") : "undetermined") << "\n";
    if (!rep.rigid) {
        out << "diagnostic=pairwise distances change: not a rigid motion\n";
        return kNonRigid;
    }
    if (rep.proper && !*rep.proper) {
        out << "diagnostic=improper: the data is a reflection, not a displacement\n";
        return kNonRigid;
    }
    return code;
}

int cmd_check(std::uint64_t seed, long samples, double tol, std::ostream& out) {
    const auto results = check::run_property_suite(seed, samples, tol);
    return check::print_report(results, seed, out) ? kOk : kCheckFailed;
}

}  // namespace screwkit::cli
