#include "radmax/ball.hpp"

#include "radmax/errors.hpp"
#include "radmax/golden.hpp"
#include "radmax/quadrature.hpp"
#include "radmax/special_functions.hpp"
#include "radmax/thread_pool.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radmax {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
} // namespace

LogScalar halfdisk_mass(double n, double R) {
    // int_{-R}^{R} (R^2-u^2)^{(n-1)/2} / (n-1) du = R^n B(1/2, (n+1)/2) / (n-1)
    return LogScalar::from_log(n * std::log(R) + log_beta(0.5, 0.5 * (n + 1.0)) -
                               std::log(n - 1.0));
}

namespace {

struct BallIntegrals {
    LogScalar numerator;
    LogScalar denominator; // by quadrature, cross-checked against closed form
};

BallIntegrals ball_integrals(const RadialProfile& w, const BallSpec& ball,
                             const BallAverageOptions& opt) {
    const double n = ball.n;
    const double s = ball.center_radius;
    const double R = ball.radius;
    if (!(n >= 2.0)) throw InvalidInput("ball_average: n must be >= 2");
    if (!(R > 0.0) || !(s >= 0.0) || std::isinf(R) || std::isinf(s))
        throw InvalidInput("ball_average: invalid geometry");

    // local integrability over the radius range covered by the ball
    (void)weighted_moment(w, std::max(0.0, s - R), s + R, n);

    // outer integrand: u -> inner shifted moment in dimension n-1 (the
    // half-disk density rho^{n-2} is rho^{(n-1)-1})
    const double inner_tol = opt.rel_tol / 16.0;
    const bool pp = w.kind() == RadialProfile::Kind::PiecewisePower;
    auto inner_log = [&](double u) -> double {
        const double rho_max_sq = (R - u) * (R + u);
        if (!(rho_max_sq > 0.0)) return kNegInf;
        const double rho_max = std::sqrt(rho_max_sq);
        const double c = std::fabs(s + u);
        // odd n: tau = sqrt(c^2 + rho^2) turns the inner integral into plain
        // profile moments, exact for piecewise powers; skip near the rim
        // where the difference form cancels
        if (pp && c > 0.0 && rho_max_sq > 1e-6 * c * c) {
            const double tau_max = std::hypot(c, rho_max);
            if (n == 3.0) return weighted_moment(w, c, tau_max, 2.0).log();
            if (n == 5.0) {
                const LogScalar big = weighted_moment(w, c, tau_max, 4.0);
                const LogScalar small =
                    LogScalar::from_value(c * c) * weighted_moment(w, c, tau_max, 2.0);
                if (small.log() >= big.log()) return kNegInf;
                return big.sub(small).log();
            }
        }
        const RadialProfile slice = RadialProfile::shifted(w, c);
        return weighted_moment(slice, 0.0, rho_max, n - 1.0, inner_tol).log();
    };
    auto inner_log_flat = [&](double u) -> double {
        const double rho_max_sq = (R - u) * (R + u);
        if (!(rho_max_sq > 0.0)) return kNegInf;
        return vn_measure(0.0, std::sqrt(rho_max_sq), n - 1.0).log();
    };

    // seed panel splits where the slice radius sweeps across profile
    // breakpoints: |s+u| = bp, and the center u = -s
    std::vector<double> splits;
    for (double bp : w.breakpoints()) {
        for (double sgn : {-1.0, 1.0}) {
            const double u = sgn * bp - s;
            if (u > -R && u < R) splits.push_back(u);
        }
    }
    if (-s > -R && -s < R) splits.push_back(-s);
    splits.push_back(0.0);
    std::sort(splits.begin(), splits.end());

    LogQuadOptions oq;
    oq.rel_tol = opt.rel_tol;
    oq.max_panels = 16384;

    BallIntegrals out;
    out.numerator = log_quadrature(inner_log, -R, R, splits, oq).value;
    out.denominator = log_quadrature(inner_log_flat, -R, R, splits, oq).value;
    return out;
}

} // namespace

double ball_average(const RadialProfile& w, const BallSpec& ball,
                    const BallAverageOptions& opt) {
    const auto parts = ball_integrals(w, ball, opt);
    const LogScalar closed = halfdisk_mass(ball.n, ball.radius);
    const double rel =
        std::fabs(std::expm1(parts.denominator.log() - closed.log()));
    if (rel > opt.denominator_check_tol)
        throw QuadratureFailure(
            "ball_average: denominator deviates from the closed-form half-disk "
            "mass by rel. " + std::to_string(rel));
    if (parts.numerator.is_infinite()) return kInf;
    return std::exp((parts.numerator / parts.denominator).log());
}

DimensionLimitResult dimension_limit_curve(const RadialProfile& w,
                                           const DimensionLimitSpec& spec,
                                           unsigned threads,
                                           const BallAverageOptions& opt) {
    if (!(spec.T > 0.0)) throw InvalidInput("dimension limit: T must be > 0");
    if (!(spec.center_radius >= 0.0) || !(spec.center_radius < spec.T))
        throw InvalidInput("dimension limit: requires 0 <= s < T");
    if (spec.schedule.empty())
        throw InvalidInput("dimension limit: empty schedule");
    for (size_t i = 0; i + 1 < spec.schedule.size(); ++i)
        if (!(spec.schedule[i] < spec.schedule[i + 1]))
            throw InvalidInput("dimension limit: schedule must ascend");
    if (!w.continuous_at(spec.T))
        throw BreakpointAtT("dimension limit: profile discontinuous at T");

    const double s = spec.center_radius;
    const double R = std::sqrt((spec.T - s) * (spec.T + s));

    DimensionLimitResult out;
    out.target_value = w.value(spec.T);
    out.points.resize(spec.schedule.size());
    parallel_for(spec.schedule.size(), threads, [&](size_t i) {
        const double n = spec.schedule[i];
        const double avg = ball_average(w, BallSpec{n, s, R}, opt);
        out.points[i] = {n, avg, std::fabs(avg - out.target_value)};
    });

    const size_t tail = std::min<size_t>(6, out.points.size());
    bool monotone = true;
    for (size_t i = out.points.size() - tail; i + 1 < out.points.size(); ++i)
        if (out.points[i + 1].error > out.points[i].error) monotone = false;
    const bool small = out.points.back().error < 0.01 * out.target_value;
    out.converged = monotone && small;
    return out;
}

CenteredMaximalResult centered_ball_maximal(const RadialProfile& w, double n,
                                            double r, double R_max,
                                            const CenteredMaximalOptions& opt) {
    if (!(n >= 2.0) || !(n <= 16.0))
        throw InvalidInput("centered_ball_maximal: n must lie in [2, 16]");
    if (!(r >= 0.0) || !(R_max > 0.0))
        throw InvalidInput("centered_ball_maximal: invalid r or R_max");

    const auto tail = w.tail();
    if (!tail.compact && tail.coeff > 0.0 && tail.exponent > 0.0) {
        // averages over balls big enough to reach the growing tail diverge
        CenteredMaximalResult res;
        res.value = kInf;
        res.best_radius = kInf;
        return res;
    }

    CenteredMaximalResult res;
    res.grid_per_decade = opt.grid_per_decade;

    auto avg_log = [&](double logR) -> double {
        const double R = std::exp(logR);
        const double v = ball_average(w, BallSpec{n, r, R}, opt.ball);
        return v > 0.0 ? std::log(v) : kNegInf;
    };

    const double lo = std::log(R_max * opt.r_lo_factor);
    const double hi = std::log(R_max);
    const int steps = std::max(
        2, static_cast<int>(std::ceil((hi - lo) / std::log(10.0) *
                                      opt.grid_per_decade)));
    double best_log = kNegInf;
    double best_R = R_max;
    int best_i = 0;
    std::vector<double> vals(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        vals[i] = avg_log(x);
        // ties toward smaller R
        if (vals[i] > best_log + 1e-14) {
            best_log = vals[i];
            best_R = std::exp(x);
            best_i = i;
        }
    }
    // golden refinement around the best three grid points
    const double ra = lo + (hi - lo) * std::max(0, best_i - 1) / steps;
    const double rb = lo + (hi - lo) * std::min(steps, best_i + 1) / steps;
    if (rb > ra) {
        const double refined = golden_max(avg_log, ra, rb, opt.golden_iters);
        const double v = avg_log(refined);
        if (v > best_log) {
            best_log = v;
            best_R = std::exp(refined);
        }
    }

    // the R -> 0 limit of averages is the profile value at r
    if (r > 0.0 && w.continuous_at(r)) {
        const double lv = w.log_value(r);
        if (lv > best_log) {
            best_log = lv;
            best_R = 0.0;
        }
    }

    // tail certificate beyond R_max for non-growing tails. Two bounds on the
    // average, and either suffices:
    //  - the essential sup over the radius range the ball can reach
    //    (tight for decreasing profiles and constants);
    //  - (surface ratio) * w0 v_n(range) / halfdisk mass (handles profiles
    //    whose sup is large but carries negligible mass).
    if (!tail.compact && tail.coeff > 0.0) {
        const double sup_tail = w.esssup(std::max(0.0, R_max - r), kInf);
        double worst = std::log(sup_tail);
        if (sup_tail > 0.0 && !(worst <= best_log + 1e-9)) {
            auto bound_log = [&](double logR) -> double {
                const double R = std::exp(logR);
                const LogScalar num =
                    LogScalar::from_log(log_gamma(0.5 * (n - 1.0)) +
                                        0.5 * std::log(M_PI) - log_gamma(0.5 * n)) *
                    weighted_moment(w, std::max(0.0, r - R), r + R, n);
                return (num / halfdisk_mass(n, R)).log();
            };
            double moment_worst = kNegInf;
            const double blo = std::log(R_max);
            const double bhi = blo + std::log(1e6);
            for (int i = 0; i <= 32; ++i)
                moment_worst =
                    std::max(moment_worst, bound_log(blo + (bhi - blo) * i / 32.0));
            moment_worst =
                std::max(moment_worst, bound_log(golden_max(bound_log, blo, bhi, 40)));
            if (tail.exponent == 0.0)
                moment_worst = std::max(moment_worst, std::log(tail.coeff));
            worst = std::min(worst, moment_worst);
        }
        if (worst > best_log + 1e-6) // additive log slack = relative value slack
            throw TailNotControlled(
                "centered_ball_maximal: R_max truncates an uncontrolled sup");
    }

    res.value = std::exp(best_log);
    res.best_radius = best_R;
    return res;
}

} // namespace radmax
