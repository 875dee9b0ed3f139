#include "radmax/oracles.hpp"

#include "radmax/errors.hpp"
#include "radmax/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radmax {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
} // namespace

double uncentered_dense_oracle(const RadialData& f, const RadialProfile* w_density,
                               double n, double r, double b_hi, int grid_points) {
    if (!(b_hi > r) || grid_points < 8)
        throw InvalidInput("dense oracle: requires b_hi > r, grid_points >= 8");
    std::vector<double> pts{0.0, r};
    const double lo = std::max(b_hi * 1e-6, std::min(r > 0 ? r * 1e-3 : b_hi, b_hi));
    for (int i = 0; i <= grid_points; ++i)
        pts.push_back(lo * std::pow(b_hi / lo, static_cast<double>(i) / grid_points));
    for (double bp : f.breakpoints())
        if (bp <= b_hi) pts.push_back(bp);
    if (w_density)
        for (double bp : w_density->breakpoints())
            if (bp <= b_hi) pts.push_back(bp);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const size_t m = pts.size();
    std::vector<LogScalar> pn(m), pd(m);
    for (size_t i = 1; i < m; ++i) {
        pn[i] = pn[i - 1] + f.moment(w_density, n, pts[i - 1], pts[i]);
        pd[i] = pd[i - 1] + (w_density ? weighted_moment(*w_density, pts[i - 1], pts[i], n)
                                       : vn_measure(pts[i - 1], pts[i], n));
    }
    const size_t ridx = static_cast<size_t>(
        std::lower_bound(pts.begin(), pts.end(), r) - pts.begin());

    auto diff = [](LogScalar hi, LogScalar lo_) {
        if (lo_.is_zero()) return hi;
        if (hi.log() <= lo_.log()) return LogScalar::zero();
        return hi.sub(lo_);
    };
    double best = kNegInf;
    for (size_t i = 0; i <= ridx && i < m; ++i) {
        for (size_t j = std::max(ridx, i + 1); j < m; ++j) {
            const LogScalar den = diff(pd[j], pd[i]);
            if (den.is_zero()) continue;
            const LogScalar num = diff(pn[j], pn[i]);
            best = std::max(best, (num / den).log());
        }
    }
    return best;
}

MonteCarloEstimate segment_intersection_mc(const Segment2D& seg,
                                           const RadialIndicatorSet& E0,
                                           std::uint64_t samples, std::uint64_t seed) {
    seg.validate();
    SplitMix64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double s = seg.a + (seg.b - seg.a) * rng.uniform01();
        if (E0.contains(seg.radius_at(s))) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    MonteCarloEstimate est;
    est.value = p * seg.length();
    est.sigma = seg.length() * std::sqrt(std::max(p * (1.0 - p), 1e-12) /
                                         static_cast<double>(samples));
    return est;
}

double ball_average_riemann(const RadialProfile& w, double n, double center_radius,
                            double radius, int grid) {
    if (grid < 16) throw InvalidInput("ball_average_riemann: grid too small");
    const double R = radius;
    const double s = center_radius;
    const double du = 2.0 * R / grid;

    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double u = -R + (i + 0.5) * du;
        const double rho_max_sq = (R - u) * (R + u);
        if (!(rho_max_sq > 0.0)) continue;
        const double rho_max = std::sqrt(rho_max_sq);
        const double drho = R / grid; // uniform rho cells of the full scale
        const int cells = static_cast<int>(std::ceil(rho_max / drho));
        for (int j = 0; j < cells; ++j) {
            const double lo = j * drho;
            const double hi = std::min(rho_max, lo + drho);
            if (!(hi > lo)) continue;
            const double rho = 0.5 * (lo + hi);
            const double weight = (hi - lo) * du * std::pow(rho, n - 2.0);
            num += weight * w.value(std::hypot(s + u, rho));
            den += weight;
        }
    }
    return num / den;
}

} // namespace radmax
