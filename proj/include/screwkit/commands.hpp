#pragma once

#include "screwkit/motion_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace screwkit::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kGibbsOverflow = 3,
    kDegenerateDecomposition = 4,
    kNonRigid = 5,
    kCollinear = 6,
};

struct Options {
    double tol = 1e-9;
    bool radians = false;
};

/// Composes the records in file order and prints the screw, q and delta as
/// key=value lines.
int cmd_compose(const std::vector<io::MotionRecord>& records, const Options& opt, std::ostream& out);

/// Conjugate pair of the composed motion; angles in the units of `opt`.
int cmd_decompose(const std::vector<io::MotionRecord>& records, double theta_b, double psi,
                  const Options& opt, std::ostream& out);

/// Fits the first three correspondences and checks all of them for rigidity.
int cmd_fit(const std::vector<Correspondence>& corrs, const Options& opt, std::ostream& out);

/// Runs the property suite.
int cmd_check(std::uint64_t seed, long samples, double tol, std::ostream& out);

}  // namespace screwkit::cli
