#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace screwkit::check {

struct PropertyResult {
    std::string name;
    bool passed{true};
    long samples{0};
    long skipped{0};     ///< samples whose inputs hit a documented singularity
    double max_err{0.0};
    double tol{0.0};
    long first_failure{-1};  ///< sample index, reproducible with the same seed
};

/// Runs every module invariant. Each property has a nominal sample count,
/// scaled by samples / 10000, and a threshold scaled by tol / 1e-9.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, long samples, double tol);

/// One line per property; returns true iff all passed.
bool print_report(const std::vector<PropertyResult>& results, std::uint64_t seed, std::ostream& out);

}  // namespace screwkit::check
