#pragma once

#include "radmax/kakeya.hpp"
#include "radmax/maximal.hpp"
#include "radmax/profile.hpp"

#include <cstdint>

namespace radmax {

// Independent verification routes for the cross-check suites. None of these
// consult the implementation path they check: the dense grid enumerates
// interval pairs directly, and the Monte Carlo estimate samples arc length.

// Brute-force sup of v-averages over interval pairs drawn from a dense
// geometric grid (plus data breakpoints and the endpoints 0, r). Returns the
// log of the best average found.
double uncentered_dense_oracle(const RadialData& f, const RadialProfile* w_density,
                               double n, double r, double b_hi, int grid_points);

struct MonteCarloEstimate {
    double value;
    double sigma;
};

// Arc-length Monte Carlo for the segment/set intersection measure.
MonteCarloEstimate segment_intersection_mc(const Segment2D& seg,
                                           const RadialIndicatorSet& E0,
                                           std::uint64_t samples, std::uint64_t seed);

// Tensor-grid Riemann sum for the half-disk ball-average ratio; partial rim
// cells are weighted by their covered fraction.
double ball_average_riemann(const RadialProfile& w, double n, double center_radius,
                            double radius, int grid);

} // namespace radmax
