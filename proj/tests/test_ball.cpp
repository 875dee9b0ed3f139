#include <doctest.h>

#include "radmax/ball.hpp"
#include "radmax/errors.hpp"
#include "radmax/generators.hpp"
#include "radmax/maximal.hpp"
#include "radmax/oracles.hpp"
#include "radmax/rng.hpp"
#include "radmax/special_functions.hpp"

#include <cmath>
#include <limits>

using namespace radmax;

TEST_CASE("half-disk mass closed form") {
    // n = 2: pi R^2 / 2; n = 3: 2 R^3 / 3
    CHECK(halfdisk_mass(2.0, 1.5).value() ==
          doctest::Approx(M_PI * 2.25 / 2.0).epsilon(1e-12));
    CHECK(halfdisk_mass(3.0, 2.0).value() ==
          doctest::Approx(16.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("ball averages of constants are exact") {
    const auto one = RadialProfile::constant(1.0);
    for (double n : {2.0, 3.0, 6.0, 40.0}) {
        const double avg = ball_average(one, BallSpec{n, 0.7, 1.3});
        CHECK(avg == doctest::Approx(1.0).epsilon(1e-7));
    }
}

TEST_CASE("centered ball of t^2 in dimension 3") {
    const auto sq = RadialProfile::power(1.0, 2.0);
    const double avg = ball_average(sq, BallSpec{3.0, 0.0, 1.0});
    CHECK(avg == doctest::Approx(0.6).epsilon(1e-7));
}

TEST_CASE("off-center singular profile against the Riemann oracle") {
    const auto isq = RadialProfile::power(1.0, -0.5);
    const double got = ball_average(isq, BallSpec{3.0, 1.0, 1.0});
    const double oracle = ball_average_riemann(isq, 3.0, 1.0, 1.0, 4096);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-5));
    // n = 2 takes the pure quadrature inner path
    const double got2 = ball_average(isq, BallSpec{2.0, 1.0, 1.0});
    const double oracle2 = ball_average_riemann(isq, 2.0, 1.0, 1.0, 2048);
    CHECK(got2 == doctest::Approx(oracle2).epsilon(1e-4));
}

TEST_CASE("monotone sandwich between essinf and esssup") {
    for (int i = 0; i < 6; ++i) {
        SplitMix64 rng(derive_seed(31337, i));
        const auto w = random_profile(rng, true);
        const double s = rng.log_uniform(0.1, 5.0);
        const double R = rng.log_uniform(0.1, 5.0);
        const double n = 2.0 + static_cast<double>(rng.below(5));
        const double avg = ball_average(w, BallSpec{n, s, R});
        const double lo = w.essinf(std::max(0.0, s - R), s + R);
        const double hi = w.esssup(std::max(0.0, s - R), s + R);
        CHECK(avg >= lo * (1.0 - 1e-6));
        CHECK(avg <= hi * (1.0 + 1e-6));
    }
}

TEST_CASE("dimension limit: constants converge immediately") {
    DimensionLimitSpec spec;
    spec.T = 1.0;
    spec.center_radius = 0.5;
    spec.schedule = {2, 4, 8};
    const auto res = dimension_limit_curve(RadialProfile::constant(2.0), spec);
    for (const auto& p : res.points) CHECK(p.error < 1e-6);
    CHECK(res.converged);
}

TEST_CASE("dimension limit: linear profile matches the closed form") {
    // centered balls (s = 0): average of t over B_R is n R / (n+1)
    DimensionLimitSpec spec;
    spec.T = 2.0;
    spec.center_radius = 0.0;
    spec.schedule = {2, 4, 8, 16, 64};
    const auto res = dimension_limit_curve(RadialProfile::power(1.0, 1.0), spec);
    for (const auto& p : res.points) {
        const double expect = p.n * 2.0 / (p.n + 1.0);
        CHECK(p.average == doctest::Approx(expect).epsilon(1e-6));
    }
    CHECK(res.target_value == doctest::Approx(2.0));
}

TEST_CASE("dimension limit walks into high dimensions") {
    DimensionLimitSpec spec;
    spec.T = 1.0;
    spec.center_radius = 0.6;
    spec.schedule = {2, 8, 32, 128, 256};
    const auto res = dimension_limit_curve(RadialProfile::power(1.0, -0.5), spec, 2);
    CHECK(res.points.back().error < 0.02);
    for (size_t i = 1; i < res.points.size(); ++i)
        CHECK(res.points[i].error <= res.points[i - 1].error * (1.0 + 1e-6));
}

TEST_CASE("discontinuity at the target radius is rejected") {
    DimensionLimitSpec spec;
    spec.T = 1.0;
    spec.center_radius = 0.0;
    spec.schedule = {2, 4};
    CHECK_THROWS_AS(dimension_limit_curve(RadialProfile::window(0.0, 1.0), spec),
                    BreakpointAtT);
}

TEST_CASE("centered ball maximal basics") {
    CenteredMaximalOptions opt;
    opt.grid_per_decade = 16;
    const auto one = RadialProfile::constant(1.0);
    const auto r1 = centered_ball_maximal(one, 3.0, 1.0, 8.0, opt);
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-7));

    const auto win = RadialProfile::window(0.0, 1.0);
    const auto r2 = centered_ball_maximal(win, 2.0, 2.0, 16.0, opt);
    CHECK(r2.value > 0.0);
    CHECK(r2.value < 1.0);
    // two-sided comparison with the ring operator
    const auto ring = annuli_maximal(RadialData(win), 2.0, 2.0);
    CHECK(r2.value <= 2.0 * std::exp(ring.value.log()) * (1.0 + 1e-6));

    const auto grow = RadialProfile::power(1.0, 0.5);
    const auto r3 = centered_ball_maximal(grow, 2.0, 1.0, 8.0, opt);
    CHECK(std::isinf(r3.value));
}

TEST_CASE("centered ball maximal rejects out-of-range dimensions") {
    const auto one = RadialProfile::constant(1.0);
    CHECK_THROWS_AS(centered_ball_maximal(one, 17.0, 1.0, 4.0), InvalidInput);
    CHECK_THROWS_AS(centered_ball_maximal(one, 1.5, 1.0, 4.0), InvalidInput);
}
