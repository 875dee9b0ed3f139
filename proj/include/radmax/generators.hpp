#pragma once

#include "radmax/kakeya.hpp"
#include "radmax/profile.hpp"
#include "radmax/radial_sets.hpp"
#include "radmax/rng.hpp"

#include <vector>

namespace radmax {

// Seeded generators behind every randomized suite. Distributions are part of
// the tool contract (documented in the README) so suites are portable:
//  - profiles: 1..8 power pieces, breakpoints log-uniform in [1e-2, 1e2];
//    exponents uniform in [-0.9, 0] for the A1-type family (coefficients
//    chained continuously, so the profile is decreasing), exponents in
//    [-0.9, 2] with jump factors exp(U(-1.5, 1.5)) otherwise;
//  - indicator sets: 1..6 disjoint intervals from sorted log-uniform radii
//    in [1e-2, 40];
//  - segments: r0 log-uniform in [0.05, 20], phi uniform in [0, pi],
//    offsets log-uniform in [1e-2, 40] on each side.

RadialProfile random_profile(SplitMix64& rng, bool a1_type);
RadialIndicatorSet random_indicator_set(SplitMix64& rng);
Segment2D random_segment(SplitMix64& rng);

// The fixed battery of layered radial test functions used by the weak-type
// experiments (ten functions, compact support).
std::vector<SimpleRadialFunction> standard_battery();

} // namespace radmax
