#include "radmax/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radmax {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

RadialProfile random_profile(SplitMix64& rng, bool a1_type) {
    const int pieces = 1 + static_cast<int>(rng.below(8));
    std::vector<double> edges;
    for (int i = 0; i + 1 < pieces; ++i) edges.push_back(rng.log_uniform(1e-2, 1e2));
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i + 1] <= edges[i] * (1.0 + 1e-9))
            edges[i + 1] = edges[i] * (1.0 + 1e-3);

    const double exp_hi = a1_type ? 0.0 : 2.0;
    std::vector<PowerPiece> out;
    double coeff = std::exp(rng.uniform(-1.0, 1.0));
    double lo = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double hi = i + 1 < pieces ? edges[i] : kInf;
        const double expo = rng.uniform(-0.9, exp_hi);
        if (i > 0) {
            // continuity at the joint; non-A1 profiles jump by a random factor
            const double prev_val = out.back().coeff * std::pow(lo, out.back().exponent);
            coeff = prev_val / std::pow(lo, expo);
            if (!a1_type) coeff *= std::exp(rng.uniform(-1.5, 1.5));
        }
        out.emplace_back(lo, hi, coeff, expo);
        lo = hi;
    }
    return RadialProfile::piecewise_power(std::move(out));
}

RadialIndicatorSet random_indicator_set(SplitMix64& rng) {
    const int m = 1 + static_cast<int>(rng.below(6));
    std::vector<double> pts;
    for (int i = 0; i < 2 * m; ++i) pts.push_back(rng.log_uniform(1e-2, 40.0));
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] <= pts[i] * (1.0 + 1e-12))
            pts[i + 1] = pts[i] * (1.0 + 1e-6);
    std::vector<RadialIndicatorSet::Interval> iv;
    for (int i = 0; i < m; ++i) iv.push_back({pts[2 * i], pts[2 * i + 1]});
    return RadialIndicatorSet::from_intervals(std::move(iv));
}

Segment2D random_segment(SplitMix64& rng) {
    Segment2D seg;
    seg.r0 = rng.log_uniform(0.05, 20.0);
    seg.phi = rng.uniform(0.0, M_PI);
    seg.a = -rng.log_uniform(1e-2, 40.0);
    seg.b = rng.log_uniform(1e-2, 40.0);
    return seg;
}

std::vector<SimpleRadialFunction> standard_battery() {
    using Set = RadialIndicatorSet;
    using F = SimpleRadialFunction;
    std::vector<F> fs;
    fs.push_back(F({{1.0, Set::single(0.0, 1.0)}}));
    fs.push_back(F({{1.0, Set::single(1.0, 2.0)}}));
    fs.push_back(F({{1.0, Set::from_intervals({{0.25, 0.5}, {1.0, 4.0}})}}));
    fs.push_back(F({{1.0, Set::single(0.0, 2.0)}, {1.0, Set::single(0.0, 1.0)}}));
    fs.push_back(F({{0.5, Set::single(0.0, 8.0)},
                    {1.0, Set::single(1.0, 4.0)},
                    {2.0, Set::single(2.0, 3.0)}}));
    fs.push_back(F({{1.0, Set::single(0.99, 1.01)}}));
    fs.push_back(F({{1.0, Set::single(0.0, 0.01)}}));
    fs.push_back(F({{1.0, Set::single(0.1, 10.0)}, {3.0, Set::single(0.5, 2.0)}}));
    fs.push_back(F({{1.0, Set::from_intervals({{3.0, 3.5}, {4.0, 4.5}, {5.0, 5.5}})}}));
    fs.push_back(F({{1.0, Set::single(0.0, 16.0)},
                    {1.0, Set::single(0.0, 8.0)},
                    {1.0, Set::single(0.0, 4.0)},
                    {1.0, Set::single(0.0, 2.0)}}));
    return fs;
}

} // namespace radmax
