#include <doctest.h>

#include "radmax/a1.hpp"
#include "radmax/errors.hpp"
#include "radmax/generators.hpp"
#include "radmax/maximal.hpp"
#include "radmax/oracles.hpp"
#include "radmax/rng.hpp"

#include <cmath>
#include <limits>

using namespace radmax;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// pointwise sum of two piecewise-constant profiles (stays piecewise constant)
RadialProfile sum_pc(const RadialProfile& f, const RadialProfile& g) {
    std::vector<double> edges{0.0};
    for (double b : f.breakpoints()) edges.push_back(b);
    for (double b : g.breakpoints()) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.push_back(kInf);
    std::vector<PowerPiece> pieces;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double t = edges[i];
        pieces.emplace_back(edges[i], edges[i + 1], f.value(t) + g.value(t), 0.0);
    }
    return RadialProfile::piecewise_power(std::move(pieces));
}
} // namespace

TEST_CASE("indicator data: analytic optimum at breakpoints") {
    const RadialData f{RadialIndicatorSet::single(0.0, 1.0)};
    for (double n : {2.0, 3.0, 7.0}) {
        for (double r : {1.5, 2.0, 5.0}) {
            const auto ev = uncentered_maximal(f, std::nullopt, n, r);
            CHECK(ev.method == MaximalEvaluation::Method::BreakpointExact);
            CHECK(ev.value.log() == doctest::Approx(-n * std::log(r)).epsilon(1e-13));
            CHECK(ev.witness_a == doctest::Approx(0.0));
            CHECK(ev.witness_b == doctest::Approx(r));
        }
    }
}

TEST_CASE("constant data evaluates to the constant") {
    const RadialData f{RadialProfile::constant(2.5)};
    const auto ev = uncentered_maximal(f, std::nullopt, 4.0, 1.3);
    CHECK(std::exp(ev.value.log()) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("ring operator on an off-center shell") {
    // chi_[1,2], n = 3, r = 0.5: best interval [0.5, 2]
    const RadialData f{RadialIndicatorSet::single(1.0, 2.0)};
    const auto ev = annuli_maximal(f, 3.0, 0.5);
    CHECK(std::exp(ev.value.log()) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(ev.witness_a == doctest::Approx(0.5));
    CHECK(ev.witness_b == doctest::Approx(2.0));
    // inside the shell the operator saturates at 1
    const auto inside = annuli_maximal(f, 3.0, 1.5);
    CHECK(std::exp(inside.value.log()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power profiles: closed-form value n/(n-alpha) * w(r)") {
    const double alpha = 0.5;
    const auto w = RadialProfile::power(1.0, -alpha);
    const RadialData f{w};
    const auto cc = condition_c_constants(w);
    for (double n : {2.0, 5.0, 16.0}) {
        const double cert = a1_upper_from_condc(cc, n);
        for (double r : {0.3, 1.0, 7.0}) {
            const auto ev = uncentered_maximal(f, std::nullopt, n, r);
            const double expect = n / (n - alpha) * std::pow(r, -alpha);
            CHECK(std::exp(ev.value.log()) ==
                  doctest::Approx(expect).epsilon(1e-9));
            // the certified bound dominates the pointwise ratio
            CHECK(std::exp(ev.value.log()) <= cert * w.value(r) * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("dimension transport of the ring operator") {
    // M_{v_n} w <= (n/k) M_{v_k} w pointwise
    const RadialData f{RadialProfile::power(1.0, -0.5)};
    SplitMix64 rng(4242);
    const RadialData g{random_profile(rng, true)};
    for (double r : {0.1, 1.0, 10.0}) {
        double prev_n = 0.0, prev_val = 0.0;
        for (double n : {2.0, 4.0, 8.0, 16.0}) {
            for (const auto* data : {&f, &g}) {
                const double vn =
                    std::exp(uncentered_maximal(*data, std::nullopt, n, r).value.log());
                if (prev_n > 0.0 && data == &g) {
                    CHECK(vn <= (n / prev_n) * prev_val * (1.0 + 1e-9));
                }
                if (data == &g) prev_val = vn;
            }
            prev_n = n;
        }
    }
}

TEST_CASE("sublinearity and homogeneity") {
    const auto f = RadialProfile::window(0.5, 2.0, 1.0);
    const auto g = RadialProfile::window(1.0, 4.0, 0.7);
    const auto s = sum_pc(f, g);
    for (double r : {0.2, 1.1, 3.0, 6.0}) {
        const double mf = std::exp(
            uncentered_maximal(RadialData(f), std::nullopt, 2.0, r).value.log());
        const double mg = std::exp(
            uncentered_maximal(RadialData(g), std::nullopt, 2.0, r).value.log());
        const double ms = std::exp(
            uncentered_maximal(RadialData(s), std::nullopt, 2.0, r).value.log());
        CHECK(ms <= (mf + mg) * (1.0 + 1e-9));
    }
    // homogeneity is exact in log space
    const auto one = uncentered_maximal(RadialData(f), std::nullopt, 3.0, 0.8);
    const auto five =
        uncentered_maximal(RadialData(f.scaled(5.0)), std::nullopt, 3.0, 0.8);
    CHECK(five.value.log() ==
          doctest::Approx(one.value.log() + std::log(5.0)).epsilon(1e-13));
}

TEST_CASE("weighted measure path") {
    // density t^{-1/2}, f = chi_[0,1], n = 2, r = 2: optimum [0, 2]
    const RadialData f{RadialIndicatorSet::single(0.0, 1.0)};
    const auto w = RadialProfile::power(1.0, -0.5);
    const auto ev = uncentered_maximal(f, w, 2.0, 2.0);
    CHECK(std::exp(ev.value.log()) ==
          doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-12));
    // constant data stays fixed under any admissible density
    const RadialData c{RadialProfile::constant(3.0)};
    const auto evc = uncentered_maximal(c, w, 3.0, 1.0);
    CHECK(std::exp(evc.value.log()) == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("growing data diverges; singular data diverges") {
    const RadialData grow{RadialProfile::power(1.0, 0.5)};
    const auto ev = uncentered_maximal(grow, std::nullopt, 3.0, 1.0);
    CHECK(ev.value.is_infinite());
    CHECK(std::isinf(ev.witness_b));

    const RadialData sing{RadialProfile::piecewise_power(
        {PowerPiece(0, 1, 1.0, -1.5), PowerPiece(1, kInf, 1.0, -1.5)})};
    const auto ev2 = uncentered_maximal(sing, std::nullopt, 1.0, 0.5);
    CHECK(ev2.value.is_infinite());
    CHECK(ev2.witness_a == 0.0);
}

TEST_CASE("explicit window marks results truncated") {
    const RadialData f{RadialProfile::power(1.0, -0.25)};
    UncenteredOptions opt;
    opt.b_max = 4.0;
    const auto ev = uncentered_maximal(f, std::nullopt, 2.0, 1.0, opt);
    CHECK(ev.truncated);
    CHECK(ev.witness_b <= 4.0 * (1.0 + 1e-12));
}

TEST_CASE("optimizer soundness: witness averages and dense oracle") {
    for (int i = 0; i < 10; ++i) {
        SplitMix64 rng(derive_seed(777, i));
        const auto w = random_profile(rng, true);
        const double r = rng.log_uniform(0.05, 20.0);
        const double n = 2.0 + static_cast<double>(rng.below(7));
        const RadialData data{w};
        const auto ev = uncentered_maximal(data, std::nullopt, n, r);
        // value equals the average over the witness
        const auto num = data.moment(nullptr, n, ev.witness_a, ev.witness_b);
        const auto den = vn_measure(ev.witness_a, ev.witness_b, n);
        CHECK(ev.value.log() == doctest::Approx((num / den).log()).epsilon(1e-12));
        // never materially below the dense oracle
        double b_hi = 64.0 * std::max(r, 1.0);
        for (double bp : w.breakpoints()) b_hi = std::max(b_hi, 8.0 * bp);
        const double oracle = uncentered_dense_oracle(data, nullptr, n, r, b_hi, 256);
        CHECK(std::expm1(oracle - ev.value.log()) <= 1e-4);
    }
}

TEST_CASE("level-set measures on tabulated data") {
    const double n = 4.0;
    const auto flat = RadialProfile::tabulated({0.5, 1.0, 2.0, 3.0}, {2.0, 2.0, 2.0});
    const auto one = RadialProfile::constant(1.0);
    const auto m1 = weighted_level_set_measure(flat, one, n, 1.0);
    CHECK(std::fabs(m1.log() - vn_measure(0.5, 3.0, n).log()) < 1e-12);
    CHECK(weighted_level_set_measure(flat, one, n, 3.0).is_zero());

    // ring operator of chi_[0,1] at n = 2 tabulated: {g > 1/4} = [0, 2)
    const RadialData f{RadialIndicatorSet::single(0.0, 1.0)};
    const auto grid = geometric_grid(1.0 / 1024.0, 8.0, 2048);
    std::vector<double> gv(grid.size() - 1);
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        gv[i] = std::exp(uncentered_maximal(f, std::nullopt, 2.0, grid[i]).value.log());
    const auto tab = RadialProfile::tabulated(grid, gv);
    LevelSetOptions lso;
    lso.straddle_tol = 0.05;
    const auto meas = weighted_level_set_measure(tab, one, 2.0, 0.25, lso);
    // v_2([0,2]) = 2 up to the head cell [0, 1/1024) and grid granularity
    CHECK(std::exp(meas.log()) == doctest::Approx(2.0).epsilon(5e-3));
}

TEST_CASE("level-set spread guard") {
    const auto jumpy = RadialProfile::tabulated({1.0, 2.0, 3.0}, {1.0, 0.1});
    const auto one = RadialProfile::constant(1.0);
    CHECK_THROWS_AS(
        (void)weighted_level_set_measure(jumpy, one, 2.0, 0.5, LevelSetOptions{}),
        GridTooCoarse);
}

TEST_CASE("weak-type witness stays under the selection bound") {
    const auto one = RadialProfile::constant(1.0);
    std::vector<SimpleRadialFunction> fs{
        SimpleRadialFunction({{1.0, RadialIndicatorSet::single(0.0, 1.0)}})};
    std::vector<double> lambdas;
    for (int i = 0; i < 16; ++i) lambdas.push_back(0.9 * std::pow(0.5, i));
    LevelSetOptions lso;
    lso.straddle_tol = 0.05;
    const auto wit = weak11_empirical_constant(one, 2.0, fs, lambdas, 512, lso);
    CHECK(wit.constant > 0.0);
    CHECK(wit.constant <= 2.0 * (1.0 + 1e-2)); // Young factor with (w)_{A1} = 1
}

TEST_CASE("lorentz norms") {
    const double n = 4.0;
    const auto w = RadialProfile::power(1.0, -0.5);
    // single level: c * w(E)^{1/p}
    const auto tab = RadialProfile::tabulated({1.0, 3.0}, {2.5});
    const double expect =
        2.5 * std::exp(weighted_moment(w, 1.0, 3.0, n).log() / n);
    CHECK(lorentz_weak_norm(tab, w, n, n) == doctest::Approx(expect).epsilon(1e-12));
    // zero data
    const auto zero_tab = RadialProfile::tabulated({1.0, 2.0}, {0.0});
    CHECK(lorentz_weak_norm(zero_tab, w, n, n) == 0.0);
    // two-layer tabulation: max of the two closed-form candidates
    const auto two = RadialProfile::tabulated({1.0, 2.0, 3.0}, {3.0, 1.0});
    const double cand_hi = 3.0 * std::exp(weighted_moment(w, 1, 2, n).log() / n);
    const double cand_lo = 1.0 * std::exp(weighted_moment(w, 1, 3, n).log() / n);
    CHECK(lorentz_weak_norm(two, w, n, n) ==
          doctest::Approx(std::max(cand_hi, cand_lo)).epsilon(1e-12));

    // L^{n,1} of nested layers: sum of c_j w(E_j)^{1/n}
    const SimpleRadialFunction f({{0.5, RadialIndicatorSet::single(0.0, 8.0)},
                                  {1.0, RadialIndicatorSet::single(1.0, 4.0)},
                                  {2.0, RadialIndicatorSet::single(2.0, 3.0)}});
    double total = 0.0;
    total += 0.5 * std::exp(weighted_moment(w, 0, 8, n).log() / n);
    total += 1.0 * std::exp(weighted_moment(w, 1, 4, n).log() / n);
    total += 2.0 * std::exp(weighted_moment(w, 2, 3, n).log() / n);
    CHECK(lorentz_n1_norm(f, w, n) == doctest::Approx(total).epsilon(1e-12));
    CHECK(lorentz_n1_norm(SimpleRadialFunction({}), w, n) == 0.0);
}

TEST_CASE("simple function layering is validated") {
    CHECK_THROWS_AS(SimpleRadialFunction({{1.0, RadialIndicatorSet::single(1.0, 2.0)},
                                          {1.0, RadialIndicatorSet::single(0.0, 3.0)}}),
                    InvalidInput);
    CHECK_NOTHROW(SimpleRadialFunction({{1.0, RadialIndicatorSet::single(0.0, 3.0)},
                                        {1.0, RadialIndicatorSet::single(1.0, 2.0)}}));
}
