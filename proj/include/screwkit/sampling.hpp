#pragma once

#include "screwkit/core.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace screwkit::sampling {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for sample `index` of the stream `name`; independent of evaluation order.
inline std::uint64_t sample_seed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return splitmix64(splitmix64(seed ^ h) + index);
}

/// Portable uniform draws on top of mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_{seed} {}

    /// [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return eng_(); }
    int index(int n) { return static_cast<int>(uniform() * n); }

    Vec3 in_box(double half) { return {uniform(-half, half), uniform(-half, half), uniform(-half, half)}; }

    UnitVec3 direction() {
        for (;;) {
            const Vec3 v = in_box(1.0);
            const double n = v.norm();
            if (n > 0.1 && n <= 1.0) return UnitVec3::from(v);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace screwkit::sampling
