#include "radmax/a1.hpp"

#include "radmax/ball.hpp"
#include "radmax/errors.hpp"
#include "radmax/golden.hpp"
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

// ---------------------------------------------------------------------------
// condition (c)

namespace {

// pointwise inf of the representative over [0, x) (the right endpoint
// excluded, unlike essinf)
double inf_before(const std::vector<PowerPiece>& pieces, double x) {
    double best = kInf;
    for (const auto& p : pieces) {
        const double hi = std::min(p.hi, x);
        if (!(hi > p.lo)) continue;
        best = std::min(best, std::exp(p.log_value(p.lo)));
        best = std::min(best, std::exp(p.log_value(hi)));
    }
    return best;
}

double dyadic_ratio(const RadialProfile& w, double R) {
    const double sup = w.esssup(R, 2.0 * R);
    const double inf = w.essinf(R, 2.0 * R);
    if (inf == 0.0) return sup == 0.0 ? 1.0 : kInf;
    if (std::isinf(sup)) return kInf;
    return sup / inf;
}

double beta_piecewise(const RadialProfile& w) {
    const auto bps = w.breakpoints();
    std::vector<double> cands;
    for (double b : bps) {
        cands.push_back(b);
        cands.push_back(0.5 * b);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // asymptotic configurations: [R, 2R] inside the first / last piece
    const auto& ps = w.pieces();
    double best = std::max(std::pow(2.0, std::fabs(ps.front().exponent)),
                           std::pow(2.0, std::fabs(ps.back().exponent)));
    for (double c : cands) best = std::max(best, dyadic_ratio(w, c));
    // refine within each configuration cell (the ratio need not be monotone
    // when [R, 2R] spans several pieces)
    for (size_t i = 0; i + 1 < cands.size(); ++i) {
        const double lo = std::log(cands[i] > 0 ? cands[i] : cands[i + 1] * 1e-6);
        const double hi = std::log(cands[i + 1]);
        if (!(hi > lo)) continue;
        const double x = golden_max(
            [&](double lr) { return std::log(dyadic_ratio(w, std::exp(lr))); }, lo,
            hi, 32);
        best = std::max(best, dyadic_ratio(w, std::exp(x)));
    }
    return best;
}

double eta_piecewise(const RadialProfile& w) {
    const auto& ps = w.pieces();
    // increasing unbounded tail: not decreasing up to any constant
    if (ps.back().coeff > 0.0 && ps.back().exponent > 0.0) return kInf;

    double best = 1.0;
    auto offer = [&](double value, double x) {
        if (value <= 0.0) return; // w(s) = 0 never violates the decrease
        const double m = x > 0.0 ? inf_before(ps, x) : value;
        if (m == 0.0) {
            best = kInf; // vanished earlier, positive now
            return;
        }
        best = std::max(best, value / m);
    };
    for (const auto& p : ps) {
        if (p.lo > 0.0) offer(std::exp(p.log_value(p.lo)), p.lo);
        if (!std::isinf(p.hi)) {
            // limit from the left at the piece end
            offer(std::exp(p.log_value(p.hi)), p.hi);
        } else if (p.exponent == 0.0 && p.coeff > 0.0) {
            offer(p.coeff, p.lo > 0.0 ? p.lo : 1.0);
        }
    }
    return best;
}

double beta_tabulated(const RadialProfile& w) {
    const auto bps = w.breakpoints();
    std::vector<double> cands;
    for (double b : bps) {
        cands.push_back(b);
        cands.push_back(0.5 * b);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    double best = 1.0;
    // piecewise-constant data: the configuration is constant between
    // candidate edges; probe geometric midpoints
    for (size_t i = 0; i + 1 < cands.size(); ++i)
        best = std::max(best, dyadic_ratio(w, std::sqrt(cands[i] * cands[i + 1])));
    for (double c : cands) best = std::max(best, dyadic_ratio(w, c));
    // a window reaching past the grid edge sees the zero outside
    best = std::max(best, dyadic_ratio(w, w.grid().back() * 0.75));
    return best;
}

double eta_tabulated(const RadialProfile& w) {
    const auto& vals = w.grid_values();
    double running_min = kInf;
    double best = 1.0;
    bool seen_zero_inside = false;
    for (double v : vals) {
        if (v > 0.0) {
            if (seen_zero_inside) return kInf;
            if (running_min < kInf) {
                if (running_min == 0.0) return kInf;
                best = std::max(best, v / running_min);
            }
            running_min = std::min(running_min, v);
        } else if (running_min < kInf) {
            seen_zero_inside = true;
        }
    }
    return best;
}

} // namespace

ConditionCConstants condition_c_constants(const RadialProfile& w) {
    ConditionCConstants cc;
    double beta, eta;
    switch (w.kind()) {
        case RadialProfile::Kind::PiecewisePower:
            beta = beta_piecewise(w);
            eta = eta_piecewise(w);
            break;
        case RadialProfile::Kind::Tabulated:
            beta = beta_tabulated(w);
            eta = eta_tabulated(w);
            break;
        default:
            throw InvalidInput("condition_c_constants: piecewise-power or tabulated "
                               "profiles only");
    }
    cc.beta = beta;
    cc.eta = eta;
    cc.beta_finite = std::isfinite(beta);
    cc.eta_finite = std::isfinite(eta);
    return cc;
}

double a1_upper_from_condc(const ConditionCConstants& cc, double n) {
    if (!cc.beta_finite || !cc.eta_finite) return kInf;
    if (!(n > std::log2(cc.beta) + 1.0)) return kInf;
    return std::max(cc.beta, 4.0 * cc.beta * cc.eta);
}

// ---------------------------------------------------------------------------
// lower bounds

namespace {

double interval_ratio_log(const RadialProfile& w, double n, double a, double b) {
    if (!(b > a)) return kNegInf;
    const double inf = w.essinf(a, b);
    if (std::isinf(inf)) return kNegInf; // degenerate
    const LogScalar den = vn_measure(a, b, n);
    LogScalar num;
    try {
        num = weighted_moment(w, a, b, n);
    } catch (const DivergentMoment&) {
        return kInf;
    }
    if (num.is_zero()) return kNegInf;
    if (inf == 0.0) return kInf;
    return (num / den).log() - std::log(inf);
}

} // namespace

A1Estimate a1_lower_bound(const RadialProfile& w, double n,
                          const A1SearchOptions& opt) {
    A1Estimate est;
    est.n = n;
    est.upper = kInf;

    std::vector<double> cands;
    cands.push_back(0.0);
    for (double b : w.breakpoints())
        if (b >= opt.window_lo && b <= opt.window_hi) cands.push_back(b);
    const double decades = std::log10(opt.window_hi / opt.window_lo);
    const int steps = std::max(2, static_cast<int>(decades * opt.dyadic_per_decade));
    for (int i = 0; i <= steps; ++i)
        cands.push_back(opt.window_lo *
                        std::pow(opt.window_hi / opt.window_lo,
                                 static_cast<double>(i) / steps));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    double best = kNegInf;
    double ba = 0.0, bb = 0.0;
    for (size_t i = 0; i < cands.size(); ++i) {
        for (size_t j = i + 1; j < cands.size(); ++j) {
            const double v = interval_ratio_log(w, n, cands[i], cands[j]);
            if (v > best) {
                best = v;
                ba = cands[i];
                bb = cands[j];
            }
        }
    }

    if (std::isinf(best) && best > 0) {
        est.lower = kInf;
        est.witness_a = ba;
        est.witness_b = bb;
        return est;
    }

    // refine both endpoints
    for (int pass = 0; pass < 2; ++pass) {
        auto it = std::lower_bound(cands.begin(), cands.end(), ba);
        const double alo = it == cands.begin() ? 0.0 : *(it - 1);
        const double ahi = std::min(bb, it + 1 == cands.end() ? bb : *(it + 1));
        if (ahi > alo) {
            const double ra =
                golden_max([&](double x) { return interval_ratio_log(w, n, x, bb); },
                           alo, ahi, opt.golden_iters);
            if (interval_ratio_log(w, n, ra, bb) > interval_ratio_log(w, n, ba, bb))
                ba = ra;
        }
        it = std::lower_bound(cands.begin(), cands.end(), bb);
        const double blo = std::max(ba, it == cands.begin() ? ba : *(it - 1));
        const double bhi = it + 1 >= cands.end() ? opt.window_hi : *(it + 1);
        if (bhi > blo) {
            const double rb =
                golden_max([&](double x) { return interval_ratio_log(w, n, ba, x); },
                           blo, bhi, opt.golden_iters);
            if (interval_ratio_log(w, n, ba, rb) > interval_ratio_log(w, n, ba, bb))
                bb = rb;
        }
    }

    const double ratio_log = interval_ratio_log(w, n, ba, bb);
    est.lower = std::max(1.0, std::exp(ratio_log)); // (w)_{A1} >= 1 always
    est.witness_a = ba;
    est.witness_b = bb;
    est.window_limited =
        bb >= opt.window_hi * (1.0 - 1e-9) || (ba > 0.0 && ba <= opt.window_lo * (1.0 + 1e-9));
    return est;
}

std::vector<A1Estimate> a1_dimension_sweep(const RadialProfile& w,
                                           const std::vector<double>& schedule,
                                           const A1SearchOptions& opt,
                                           unsigned threads) {
    if (schedule.empty()) throw InvalidInput("a1_dimension_sweep: empty schedule");
    for (size_t i = 0; i + 1 < schedule.size(); ++i)
        if (!(schedule[i] < schedule[i + 1]))
            throw InvalidInput("a1_dimension_sweep: schedule must ascend");

    const auto cc = condition_c_constants(w);
    std::vector<A1Estimate> out(schedule.size());
    parallel_for(schedule.size(), threads, [&](size_t i) {
        out[i] = a1_lower_bound(w, schedule[i], opt);
    });

    for (size_t i = 0; i < out.size(); ++i) {
        const double n = schedule[i];
        double upper = a1_upper_from_condc(cc, n);
        auto kind = std::isfinite(upper) ? A1Estimate::Certificate::CondC
                                         : A1Estimate::Certificate::None;
        for (size_t k = 0; k < i; ++k) {
            const double transported =
                (n / schedule[k]) * a1_upper_from_condc(cc, schedule[k]);
            if (transported < upper) {
                upper = transported;
                kind = A1Estimate::Certificate::Transport;
            }
        }
        out[i].upper = upper;
        out[i].certificate = kind;
    }

    // transport consistency: lower(n) <= (n/k) upper(k) for all k <= n
    for (size_t i = 0; i < out.size(); ++i) {
        bool ok = true;
        for (size_t k = 0; k <= i; ++k) {
            const double cert = a1_upper_from_condc(cc, schedule[k]);
            if (!std::isfinite(cert)) continue;
            if (out[i].lower > (schedule[i] / schedule[k]) * cert * (1.0 + 1e-9))
                ok = false;
        }
        out[i].transport_ok = ok;
    }
    return out;
}

// ---------------------------------------------------------------------------
// growth example

std::vector<GrowthPoint> growth_example_curve(double alpha,
                                              const std::vector<double>& schedule) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw InvalidInput("growth_example_curve: alpha in (0,1)");
    std::vector<GrowthPoint> out;
    out.reserve(schedule.size());
    const double lg_floor_const = log_gamma(1.0 - alpha);
    for (double n : schedule) {
        GrowthPoint p;
        p.n = n;
        p.log_ratio = std::log(n) + beta_moment(alpha, n).log();
        p.log_floor = lg_floor_const + alpha * std::log(n);
        p.holds = p.log_ratio >= p.log_floor;
        p.ratio_over_floor = std::exp(p.log_ratio - p.log_floor);
        out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// shifted weights

ShiftedCheckReport shifted_a1_check(const RadialProfile& w, double k,
                                    const std::vector<double>& rho_schedule,
                                    const std::vector<double>& r_samples,
                                    double rel_tol, unsigned threads) {
    if (!(k >= 2.0)) throw InvalidInput("shifted_a1_check: k must be >= 2");
    const auto cc = condition_c_constants(w);
    const double upper = a1_upper_from_condc(cc, k);
    if (!std::isfinite(upper))
        throw Error("shifted_a1_check: no finite A1 certificate for this weight");

    ShiftedCheckReport rep;
    rep.a1_upper = upper;
    rep.rows.resize(rho_schedule.size() * r_samples.size());
    parallel_for(rep.rows.size(), threads, [&](size_t idx) {
        const double rho = rho_schedule[idx / r_samples.size()];
        const double r = r_samples[idx % r_samples.size()];
        const RadialProfile shifted = RadialProfile::shifted(w, rho);
        auto ev = uncentered_maximal(RadialData(shifted), std::nullopt, k, r);
        const double lhs = std::exp(ev.value.log());
        const double rhs = 0.5 * k * upper * shifted.value(r);
        rep.rows[idx] = {rho, r, lhs, rhs, lhs <= rhs * (1.0 + rel_tol)};
    });
    for (const auto& row : rep.rows) {
        rep.all_pass = rep.all_pass && row.pass;
        if (row.rhs > 0.0) rep.max_ratio = std::max(rep.max_ratio, row.lhs / row.rhs);
    }
    return rep;
}

RingComparisonWitness
ring_comparison_witness(double n, const std::vector<RadialProfile>& profiles,
                        const std::vector<double>& radii, double R_max_factor,
                        unsigned threads) {
    if (!(n >= 2.0) || !(n <= 8.0))
        throw InvalidInput("ring_comparison_witness: n must lie in [2, 8]");
    RingComparisonWitness best;
    struct Row {
        double ratio;
        size_t pi;
        double r;
    };
    std::vector<Row> rows(profiles.size() * radii.size());
    parallel_for(rows.size(), threads, [&](size_t idx) {
        const size_t pi = idx / radii.size();
        const double r = radii[idx % radii.size()];
        const auto& w = profiles[pi];
        auto ann = annuli_maximal(RadialData(w), n, r);
        double largest_scale = r;
        for (double b : w.breakpoints()) largest_scale = std::max(largest_scale, b);
        auto ball =
            centered_ball_maximal(w, n, r, R_max_factor * std::max(largest_scale, 1e-6));
        const double a = std::exp(ann.value.log());
        rows[idx] = {ball.value > 0.0 ? a / ball.value : 0.0, pi, r};
    });
    for (const auto& row : rows)
        if (row.ratio > best.max_ratio) {
            best.max_ratio = row.ratio;
            best.profile_index = row.pi;
            best.radius = row.r;
        }
    return best;
}

} // namespace radmax
