#pragma once

#include "radmax/log_scalar.hpp"
#include "radmax/profile.hpp"

#include <vector>

namespace radmax {

// Ball B(z, R) in dimension n with |z| = center_radius; only the center
// distance matters for radial integrands.
struct BallSpec {
    double n;             // >= 2 (the planar reduction needs n-2 >= 0)
    double center_radius; // >= 0
    double radius;        // > 0
};

struct BallAverageOptions {
    double rel_tol = 1e-8;
    // denominator must match the closed-form half-disk mass this closely
    double denominator_check_tol = 1e-6;
};

// Average of w0(|x|) over the ball, reduced to the half-disk integral
//   N = int_{-R}^{R} int_0^{sqrt(R^2-u^2)} w0(sqrt((s+u)^2 + rho^2)) rho^{n-2} drho du
// divided by the same with w0 == 1 (all in log domain). The inner integral is
// a shifted-profile moment in dimension n-1, which keeps n ~ 1e4 tractable.
double ball_average(const RadialProfile& w, const BallSpec& ball,
                    const BallAverageOptions& opt = {});

// closed form of the half-disk mass: R^n B(1/2, (n+1)/2) / (n-1)
LogScalar halfdisk_mass(double n, double R);

struct DimensionLimitSpec {
    double T;                     // target radius, > 0
    double center_radius;         // s with 0 <= s < T; R = sqrt(T^2 - s^2)
    std::vector<double> schedule; // ascending dimensions, each >= 2
};

struct DimensionLimitPoint {
    double n;
    double average;
    double error; // |average - w0(T)|
};

struct DimensionLimitResult {
    std::vector<DimensionLimitPoint> points;
    double target_value = 0.0; // w0(T)
    bool converged = false;    // tail monotone decreasing and final error < 1%
};

DimensionLimitResult dimension_limit_curve(const RadialProfile& w,
                                           const DimensionLimitSpec& spec,
                                           unsigned threads = 1,
                                           const BallAverageOptions& opt = {});

struct CenteredMaximalOptions {
    int grid_per_decade = 64;
    int golden_iters = 40;
    double r_lo_factor = 1e-4; // smallest R probed, relative to R_max
    BallAverageOptions ball;
};

struct CenteredMaximalResult {
    double value = 0.0; // +inf when the sup diverges
    double best_radius = 0.0;
    int grid_per_decade = 0;
};

// sup over 0 < R <= R_max of the ball average at center radius r. R_max must
// carry a tail certificate: for decaying tails the sup beyond R_max is
// bounded and checked; growing tails make the sup infinite.
CenteredMaximalResult centered_ball_maximal(const RadialProfile& w, double n,
                                            double r, double R_max,
                                            const CenteredMaximalOptions& opt = {});

} // namespace radmax
