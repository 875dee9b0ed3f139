#include <doctest.h>

#include "radmax/errors.hpp"
#include "radmax/generators.hpp"
#include "radmax/profile.hpp"
#include "radmax/quadrature.hpp"
#include "radmax/rng.hpp"

#include <cmath>
#include <limits>

using namespace radmax;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("vn measure closed forms") {
    CHECK(vn_measure(0, 1, 5).value() == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(vn_measure(1, 2, 1).value() == doctest::Approx(1.0).epsilon(1e-14));
    // (0.5, 1, 1000): log = log((1 - 0.5^1000)/1000) = -log 1000 to 1e-12
    CHECK(std::fabs(vn_measure(0.5, 1, 1000).log() + std::log(1000.0)) < 1e-12);
    CHECK(vn_measure(0, kInf, 3).is_infinite());
    CHECK(vn_measure(2, 2, 3).is_zero());
    // additivity over huge-n splits
    const auto whole = vn_measure(0.25, 4.0, 1e6);
    const auto split = vn_measure(0.25, 1.1, 1e6) + vn_measure(1.1, 4.0, 1e6);
    CHECK(std::fabs(whole.log() - split.log()) < 1e-12);
}

TEST_CASE("vn measure agrees with direct quadrature at n = 1000") {
    const auto quad = log_quadrature(
        [](double t) { return 999.0 * std::log(t); }, 0.5, 1.0, {}, {});
    CHECK(std::fabs(quad.value.log() - vn_measure(0.5, 1.0, 1000).log()) < 1e-10);
}

TEST_CASE("weighted moments: closed-form examples") {
    const auto one = RadialProfile::constant(1.0);
    for (double n : {1.0, 2.0, 7.0, 100.0})
        CHECK(weighted_moment(one, 0, 1, n).value() ==
              doctest::Approx(1.0 / n).epsilon(1e-14));

    const auto isq = RadialProfile::power(1.0, -0.5);
    CHECK(weighted_moment(isq, 0, 1, 2).value() ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // (4^{99.5} - 1) / 99.5 in log scale
    const double expect =
        99.5 * std::log(4.0) + std::log1p(-std::pow(4.0, -99.5)) - std::log(99.5);
    CHECK(std::fabs(weighted_moment(isq, 1, 4, 100).log() - expect) < 1e-12);
}

TEST_CASE("weighted moments: divergence is flagged") {
    CHECK_THROWS_AS((void)weighted_moment(RadialProfile::power(1.0, -2.0), 0, 1, 2),
                    DivergentMoment);
    CHECK_THROWS_AS((void)weighted_moment(RadialProfile::power(1.0, -0.5), 1, kInf, 2),
                    DivergentMoment);
    // integrable tail: c * a^m / (-m) with m = -3
    CHECK(weighted_moment(RadialProfile::power(1.0, -5.0), 1, kInf, 2).value() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("closed form vs quadrature path on seeded piecewise profiles") {
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        SplitMix64 rng(derive_seed(20240731, i));
        const auto w = random_profile(rng, rng.uniform01() < 0.5);
        const double a = rng.log_uniform(1e-3, 10.0);
        const double b = a * rng.log_uniform(1.2, 100.0);
        const double n = 1.0 + rng.uniform(0.0, 199.0);
        const double closed = weighted_moment(w, a, b, n).log();
        const double quad = weighted_moment_quadrature(w, a, b, n).log();
        CHECK(std::fabs(std::expm1(quad - closed)) < 1e-8);
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("moment additivity and scaling") {
    SplitMix64 rng(99);
    const auto w = random_profile(rng, false);
    const double a = 0.05, b = 1.7, c = 23.0, n = 17.5;
    const auto whole = weighted_moment(w, a, c, n);
    const auto parts = weighted_moment(w, a, b, n) + weighted_moment(w, b, c, n);
    CHECK(std::fabs(whole.log() - parts.log()) < 1e-12);

    const auto scaled = weighted_moment(w.scaled(37.5), a, c, n);
    CHECK(std::fabs(scaled.log() - (std::log(37.5) + whole.log())) < 1e-13);
}

TEST_CASE("beta moment examples and properties") {
    CHECK(beta_moment(0.5, 1).value() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(beta_moment(1e-12, 7).value() == doctest::Approx(1.0 / 7.0).epsilon(1e-9));

    // Gamma(0.5) Gamma(4) / Gamma(4.5) against direct quadrature of
    // (1-t)^{-1/2} t^3 over [0,1], substituted u = 1-t so the integrable
    // singularity sits at 0 where bisection can zoom in
    LogQuadOptions opt;
    opt.rel_tol = 1e-12;
    const auto quad = log_quadrature(
        [](double u) { return -0.5 * std::log(u) + 3.0 * std::log1p(-u); }, 0.0,
        1.0, {}, opt);
    CHECK(std::fabs(std::expm1(beta_moment(0.5, 4).log() - quad.value.log())) <
          1e-9);

    // n * beta_moment is nondecreasing in n; beta_moment -> 0
    double prev = 0.0;
    for (double n : {1.0, 2.0, 5.0, 17.0, 120.0, 3000.0, 1e6}) {
        const double cur = std::log(n) + beta_moment(0.7, n).log();
        CHECK(cur >= prev - 1e-13);
        prev = cur;
    }
    CHECK(beta_moment(0.7, 1e6).log() < beta_moment(0.7, 10.0).log());
}

TEST_CASE("essinf and esssup on the canonical representative") {
    const auto isq = RadialProfile::power(1.0, -0.5);
    CHECK(isq.essinf(1, 4) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(isq.esssup(1, 4) == doctest::Approx(1.0).epsilon(1e-14));

    const auto c = RadialProfile::constant(3.25);
    CHECK(c.essinf(0.2, 7) == 3.25);
    CHECK(c.esssup(0.2, 7) == 3.25);

    // step: 2 on [0,1), 1 on [1,inf); the closed interval [0.5, 2] sees both
    const auto step = RadialProfile::piecewise_power(
        {PowerPiece(0, 1, 2.0, 0.0), PowerPiece(1, kInf, 1.0, 0.0)});
    CHECK(step.essinf(0.5, 2) == 1.0);
    CHECK(step.esssup(0.5, 2) == 2.0);
    // right-continuity: the point 1 already belongs to the lower piece
    CHECK(step.essinf(0.5, 1.0) == 1.0);
    CHECK(step.esssup(1.0, 2.0) == 1.0);
    CHECK(step.value(1.0) == doctest::Approx(1.0));
}

TEST_CASE("piecewise validation rejects gaps and overlaps") {
    CHECK_THROWS_AS(RadialProfile::piecewise_power(
                        {PowerPiece(0, 1, 1.0, 0.0), PowerPiece(2, kInf, 1.0, 0.0)}),
                    InvalidInput);
    CHECK_THROWS_AS(RadialProfile::piecewise_power({PowerPiece(0, 1, 1.0, 0.0)}),
                    InvalidInput);
    CHECK_THROWS_AS(RadialProfile::piecewise_power(
                        {PowerPiece(0.5, 1, 1.0, 0.0), PowerPiece(1, kInf, 1.0, 0.0)}),
                    InvalidInput);
}

TEST_CASE("tabulated profiles evaluate cellwise and vanish outside") {
    const auto tab = RadialProfile::tabulated({1.0, 2.0, 4.0}, {3.0, 0.5});
    CHECK(tab.value(0.5) == 0.0);
    CHECK(tab.value(1.0) == doctest::Approx(3.0));
    CHECK(tab.value(3.9) == doctest::Approx(0.5));
    CHECK(tab.value(4.0) == 0.0);
    CHECK(tab.essinf(1.5, 3.0) == doctest::Approx(0.5));
    CHECK(tab.esssup(0.5, 3.0) == doctest::Approx(3.0));
    CHECK(tab.essinf(0.5, 3.0) == 0.0);

    // moment = 3 vn([1,2]) + 0.5 vn([2,4])
    const double n = 6.0;
    const auto expect = LogScalar::from_value(3.0) * vn_measure(1, 2, n) +
                        LogScalar::from_value(0.5) * vn_measure(2, 4, n);
    CHECK(std::fabs(weighted_moment(tab, 0, kInf, n).log() - expect.log()) < 1e-9);
}

TEST_CASE("shifted profiles evaluate through the radius map") {
    const auto base = RadialProfile::power(2.0, -0.5);
    const auto sh = RadialProfile::shifted(base, 3.0);
    CHECK(sh.value(4.0) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-13));
    CHECK(sh.essinf(0.0, 4.0) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-13));
    CHECK(sh.esssup(0.0, 4.0) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));

    // moment against direct quadrature in the t domain (moderate n)
    const double n = 7.0;
    LogQuadOptions opt;
    opt.rel_tol = 1e-12;
    const auto direct = log_quadrature(
        [&](double t) {
            return base.log_value(std::hypot(3.0, t)) + (n - 1.0) * std::log(t);
        },
        0.0, 2.5, {}, opt);
    CHECK(std::fabs(std::expm1(weighted_moment(sh, 0, 2.5, n).log() -
                               direct.value.log())) < 1e-9);
}

TEST_CASE("endpoint-concentration substitution handles n = 10^6") {
    // shifted profile forces the quadrature path; compare against the
    // constant-base closed form
    const auto sh = RadialProfile::shifted(RadialProfile::constant(2.0), 1.5);
    const double n = 1e6;
    const auto got = weighted_moment(sh, 0.5, 2.0, n);
    const auto expect = LogScalar::from_value(2.0) * vn_measure(0.5, 2.0, n);
    CHECK(std::fabs(got.log() - expect.log()) < 1e-9);

    // decaying shifted base at n = 60: cross-check substitution vs direct
    const auto base = RadialProfile::power(1.0, -0.5);
    const auto sh2 = RadialProfile::shifted(base, 0.7);
    LogQuadOptions opt;
    opt.rel_tol = 1e-12;
    opt.max_panels = 1 << 15;
    const double n2 = 60.0;
    const auto direct = log_quadrature(
        [&](double t) {
            return base.log_value(std::hypot(0.7, t)) + (n2 - 1.0) * std::log(t);
        },
        0.1, 3.0, {}, opt);
    CHECK(std::fabs(std::expm1(weighted_moment(sh2, 0.1, 3.0, n2).log() -
                               direct.value.log())) < 1e-8);
}

TEST_CASE("piecewise product multiplies exactly") {
    const auto a = RadialProfile::power(2.0, -0.5);
    const auto b = RadialProfile::window(1.0, 4.0, 3.0);
    const auto prod = multiply(a, b);
    CHECK(prod.value(2.0) == doctest::Approx(6.0 / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(prod.value(0.5) == 0.0);
    CHECK(prod.value(5.0) == 0.0);
    const double n = 3.0;
    const auto direct = weighted_moment(prod, 0, kInf, n);
    const auto expect = LogScalar::from_value(6.0) *
                        weighted_moment(RadialProfile::power(1.0, -0.5), 1, 4, n);
    CHECK(std::fabs(direct.log() - expect.log()) < 1e-12);
}

TEST_CASE("profile description invariants") {
    const auto w = RadialProfile::window(1.0, 2.0);
    CHECK(w.breakpoints().size() == 2);
    CHECK(w.continuous_at(1.5));
    CHECK_FALSE(w.continuous_at(1.0));
    const auto t = w.tail();
    CHECK(t.compact);
}
