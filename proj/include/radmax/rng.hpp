#pragma once

#include <cmath>
#include <cstdint>

namespace radmax {

// splitmix64: the fixed mixing function behind every randomized suite.
// Per-trial generators are seeded from (master seed, trial index) so results
// are bit-identical no matter how trials are scheduled across workers.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mixer(master ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return mixer.next();
}

} // namespace radmax
