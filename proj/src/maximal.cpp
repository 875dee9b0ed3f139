#include "radmax/maximal.hpp"

#include "radmax/errors.hpp"
#include "radmax/golden.hpp"
#include "radmax/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

LogScalar sub_clamped(LogScalar total, LogScalar part) {
    if (part.is_zero()) return total;
    if (total.log() <= part.log()) return LogScalar::zero();
    return total.sub(part);
}

// integral of the measure density w0 t^{n-1} (w may be null) over [a,b]
LogScalar measure_moment(const RadialProfile* w, double n, double a, double b) {
    return w ? weighted_moment(*w, a, b, n) : vn_measure(a, b, n);
}

LogScalar product_moment_quad(const RadialProfile& f, const RadialProfile* w,
                              double n, double a, double b, double rel_tol) {
    if (n > 50.0)
        throw InvalidInput("product moment: quadrature product path supports n <= 50");
    std::vector<double> splits = f.breakpoints();
    if (w) {
        auto wb = w->breakpoints();
        splits.insert(splits.end(), wb.begin(), wb.end());
    }
    std::vector<double> inside;
    for (double s : splits)
        if (s > a && s < b) inside.push_back(s);
    std::sort(inside.begin(), inside.end());
    LogQuadOptions opt;
    opt.rel_tol = rel_tol;
    auto res = log_quadrature(
        [&](double t) {
            double lv = f.log_value(t) + (n - 1.0) * std::log(t);
            if (w) lv += w->log_value(t);
            return lv;
        },
        a, b, inside, opt);
    return res.value;
}

} // namespace

// ---------------------------------------------------------------------------
// RadialData

double RadialData::value(double t) const {
    if (is_profile()) return profile().value(t);
    return simple().value(t);
}

std::vector<double> RadialData::breakpoints() const {
    if (is_profile()) return profile().breakpoints();
    return simple().breakpoints();
}

bool RadialData::piecewise_constant() const {
    if (!is_profile()) return true;
    if (profile().kind() != RadialProfile::Kind::PiecewisePower) return false;
    for (const auto& p : profile().pieces())
        if (p.exponent != 0.0 && p.coeff != 0.0) return false;
    return true;
}

LogScalar RadialData::moment(const RadialProfile* w, double n, double a,
                             double b) const {
    if (!is_profile()) return simple().weighted_integral(w, n, a, b);
    const auto& f = profile();
    if (!w) return weighted_moment(f, a, b, n);
    if (f.kind() == RadialProfile::Kind::PiecewisePower &&
        w->kind() == RadialProfile::Kind::PiecewisePower)
        return weighted_moment(multiply(f, *w), a, b, n);
    return product_moment_quad(f, w, n, a, b, 1e-10);
}

// ---------------------------------------------------------------------------
// Tail planning for the sup search window

namespace {

struct DataTail {
    double start = 0.0;
    double coeff = 0.0;    // f <= coeff * t^exponent beyond start
    double exponent = 0.0;
    bool compact = true;
};

DataTail data_tail(const RadialData& f) {
    DataTail t;
    if (f.is_profile()) {
        const auto pt = f.profile().tail();
        t.start = pt.start;
        t.coeff = pt.compact ? 0.0 : pt.coeff;
        t.exponent = pt.exponent;
        t.compact = pt.compact || pt.coeff == 0.0;
        return t;
    }
    const double end = f.simple().support_end();
    if (std::isinf(end)) {
        double start = 0.0;
        for (double b : f.simple().breakpoints()) start = std::max(start, b);
        t.start = start;
        t.coeff = f.simple().value(start * 2.0 + 1.0); // constant beyond last edge
        t.exponent = 0.0;
        t.compact = t.coeff == 0.0;
    } else {
        t.start = end;
        t.compact = true;
    }
    return t;
}

struct TailPlan {
    bool infinite = false;
    double b_max = 0.0;
    bool has_limit = false;
    double limit_log = kNegInf; // lim of averages over [a, b] as b -> inf
    DataTail f_tail;
    RadialProfile::Tail w_tail;
};

// upper bound on the numerator tail: integral over [B, b] of
// cf t^{gf} * cw t^{gw} * t^{n-1}; exact once B clears both tail starts.
LogScalar tail_numerator(const TailPlan& plan, double n, double B, double b) {
    const double m = plan.f_tail.exponent + plan.w_tail.exponent + n;
    const double log_c = std::log(plan.f_tail.coeff) + std::log(plan.w_tail.coeff);
    if (!(b > B)) return LogScalar::zero();
    const double log_B = std::log(B);
    if (m == 0.0) {
        if (std::isinf(b)) return LogScalar::infinity();
        return LogScalar::from_log(log_c + std::log(std::log(b / B)));
    }
    if (m < 0.0) {
        double lv = log_c + m * log_B - std::log(-m);
        if (!std::isinf(b)) lv += std::log1p(-std::exp(m * (std::log(b) - log_B)));
        return LogScalar::from_log(lv);
    }
    if (std::isinf(b)) return LogScalar::infinity();
    const double log_b = std::log(b);
    return LogScalar::from_log(log_c + m * log_b - std::log(m) +
                               std::log1p(-std::exp(m * (log_B - log_b))));
}

TailPlan make_tail_plan(const RadialData& f, const RadialProfile* w, double n,
                        double r, const UncenteredOptions& opt) {
    TailPlan plan;
    plan.f_tail = data_tail(f);
    if (w) {
        plan.w_tail = w->tail();
        if (plan.w_tail.compact)
            throw TailNotControlled("uncentered maximal: density with compact support "
                                    "makes far intervals degenerate");
    } else {
        plan.w_tail = RadialProfile::Tail{0.0, 1.0, 0.0, false, true};
    }
    if (plan.w_tail.exponent + n <= 0.0)
        throw TailNotControlled("uncentered maximal: measure density not certifiable");

    if (opt.b_max > 0.0) {
        plan.b_max = std::max(opt.b_max, r * (1.0 + 1e-9));
        return plan;
    }

    if (plan.f_tail.compact) {
        plan.b_max = std::max({plan.f_tail.start, r * (1.0 + 1e-9), 1e-12});
        return plan;
    }
    if (plan.f_tail.exponent > 0.0) {
        plan.infinite = true;
        return plan;
    }
    if (plan.f_tail.exponent == 0.0) {
        plan.has_limit = true;
        plan.limit_log = std::log(plan.f_tail.coeff);
    }
    double B = std::max({2.0 * r, 2.0 * plan.f_tail.start, 2.0 * plan.w_tail.start, 1.0});
    plan.b_max = B;
    return plan;
}

// Certifies truncation of the sup search at B. By the mediant inequality,
// for a <= r <= B < b
//   avg([a,b]) <= max(avg([a,B]), avg([B,b])),
// and avg([a,B]) lives inside the scanned window, so it suffices to bound
// sup over b > B of avg([B,b]) <= tail_numerator(B,b) / v([B,b]).
double tail_average_bound(const RadialProfile* w, double n, double B,
                          const TailPlan& plan) {
    auto bound_log = [&](double log_b) -> double {
        const double b = std::exp(log_b);
        if (!(b > B)) return kNegInf;
        const LogScalar num = tail_numerator(plan, n, B, b);
        const LogScalar den = measure_moment(w, n, B, b);
        if (den.is_zero()) return kInf;
        return (num / den).log();
    };
    // f-value bound just past B (the b -> B limit of the ratio)
    double best = std::log(plan.f_tail.coeff) + plan.f_tail.exponent * std::log(B);
    const double lo = std::log(B) + 1e-6;
    const double hi = std::log(B) + std::log(1e8);
    for (int i = 0; i <= 24; ++i)
        best = std::max(best, bound_log(lo + (hi - lo) * i / 24.0));
    const double refined = golden_max(bound_log, lo, hi, 48);
    best = std::max(best, bound_log(refined));
    if (plan.has_limit) best = std::max(best, plan.limit_log); // b -> inf
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// uncentered maximal operator

namespace {

struct Candidates {
    std::vector<double> points; // sorted, unique, within [0, b_max]; contains r
    size_t r_index = 0;
};

Candidates build_candidates(const RadialData& f, const RadialProfile* w, double n,
                            double r, double b_max, const UncenteredOptions& opt) {
    (void)n;
    std::vector<double> pts;
    pts.push_back(0.0);
    pts.push_back(r);
    auto add_bps = [&](const std::vector<double>& bps) {
        for (double t : bps)
            if (t <= b_max) pts.push_back(t);
    };
    add_bps(f.breakpoints());
    if (w) add_bps(w->breakpoints());

    if (r > 0.0) {
        pts.push_back(r * (1.0 - 1e-9));
        pts.push_back(std::min(b_max, r * (1.0 + 1e-9)));
    }
    if (!f.piecewise_constant()) {
        // log grids on both sides of r seed the continuous optimizer
        const double ppd = std::max(4, opt.grid_per_decade);
        if (r > 0.0) {
            const double lo = r * 1e-6;
            const int steps = static_cast<int>(std::ceil(6.0 * ppd));
            for (int i = 0; i <= steps; ++i)
                pts.push_back(lo * std::pow(10.0, i / ppd));
        }
        const double glo = std::max(r, b_max * 1e-7);
        if (b_max > glo) {
            const int steps =
                static_cast<int>(std::ceil(std::log10(b_max / glo) * ppd));
            for (int i = 0; i <= steps; ++i)
                pts.push_back(std::min(b_max, glo * std::pow(10.0, i / ppd)));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // clip to [0, b_max]
    while (!pts.empty() && pts.back() > b_max) pts.pop_back();
    if (pts.empty() || pts.back() < b_max) pts.push_back(b_max);

    Candidates c;
    c.points = std::move(pts);
    c.r_index = static_cast<size_t>(
        std::lower_bound(c.points.begin(), c.points.end(), r) - c.points.begin());
    return c;
}

struct ScoredPair {
    double value_log = kNegInf;
    double a = 0.0;
    double b = 0.0;
};

struct BestPair {
    double value_log = kNegInf;
    double a = 0.0;
    double b = 0.0;
    bool found = false;

    void offer(double vlog, double a_, double b_) {
        if (std::isnan(vlog)) return;
        constexpr double kTieTol = 1e-12;
        if (!found || vlog > value_log + kTieTol) {
            value_log = vlog;
            a = a_;
            b = b_;
            found = true;
            return;
        }
        if (vlog >= value_log - kTieTol) {
            // tie: prefer the smaller interval, then the smaller left endpoint
            const double w_new = b_ - a_, w_old = b - a;
            if (w_new < w_old || (w_new == w_old && a_ < a)) {
                value_log = std::max(value_log, vlog);
                a = a_;
                b = b_;
            }
        }
    }
};

// Prefix differences carry cancellation noise on intervals holding a tiny
// share of the mass, enough to reorder near-ties at the top. Keep a short
// shortlist from the screening pass and settle the winner by exact
// re-evaluation.
class PairShortlist {
public:
    explicit PairShortlist(size_t cap) : cap_(cap) {}

    void offer(double vlog, double a, double b) {
        if (std::isnan(vlog) || (std::isinf(vlog) && vlog < 0.0)) return;
        if (entries_.size() == cap_ && vlog <= floor_) return;
        entries_.push_back({vlog, a, b});
        std::push_heap(entries_.begin(), entries_.end(), worse_first);
        if (entries_.size() > cap_) {
            std::pop_heap(entries_.begin(), entries_.end(), worse_first);
            entries_.pop_back();
        }
        floor_ = entries_.front().value_log;
    }

    const std::vector<ScoredPair>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    // min-heap on value so the worst of the shortlist sits on top
    static bool worse_first(const ScoredPair& x, const ScoredPair& y) {
        return x.value_log > y.value_log;
    }
    size_t cap_;
    double floor_ = kNegInf;
    std::vector<ScoredPair> entries_;
};

} // namespace

MaximalEvaluation uncentered_maximal(const RadialData& f,
                                     const std::optional<RadialProfile>& w_density,
                                     double n, double r,
                                     const UncenteredOptions& opt) {
    if (!(r >= 0.0) || std::isnan(r))
        throw InvalidInput("uncentered maximal: r must be >= 0");
    if (!(n >= 1.0)) throw InvalidInput("uncentered maximal: n must be >= 1");
    const RadialProfile* w = w_density ? &*w_density : nullptr;

    TailPlan plan = make_tail_plan(f, w, n, r, opt);
    if (plan.infinite) {
        MaximalEvaluation ev;
        ev.value = LogScalar::infinity();
        ev.witness_a = r;
        ev.witness_b = kInf;
        ev.method = MaximalEvaluation::Method::GridRefine;
        return ev;
    }

    MaximalEvaluation ev;
    ev.grid_per_decade = f.piecewise_constant() ? 0 : opt.grid_per_decade;
    ev.truncated = opt.b_max > 0.0;

    for (int round = 0;; ++round) {
        Candidates cand = build_candidates(f, w, n, r, plan.b_max, opt);
        const auto& U = cand.points;
        const size_t m = U.size();

        // prefix moments; the [0, u1] segment may legitimately diverge
        std::vector<LogScalar> pn(m), pd(m);
        size_t first = 0; // first usable index as a left endpoint
        pn[0] = LogScalar::zero();
        pd[0] = LogScalar::zero();
        for (size_t i = 1; i < m; ++i) {
            LogScalar dn, dd;
            bool num_div = false, den_div = false;
            try {
                dn = f.moment(w, n, U[i - 1], U[i]);
            } catch (const DivergentMoment&) {
                num_div = true;
            }
            try {
                dd = measure_moment(w, n, U[i - 1], U[i]);
            } catch (const DivergentMoment&) {
                den_div = true;
            }
            if (num_div || den_div) {
                if (i != 1)
                    throw DivergentMoment("uncentered maximal: interior divergence");
                if (num_div && !den_div) {
                    // every interval containing 0 has infinite average
                    ev.value = LogScalar::infinity();
                    ev.witness_a = 0.0;
                    ev.witness_b = std::max(r, U[1]);
                    return ev;
                }
                // measure itself blows up at 0: exclude 0 as a left endpoint
                first = 1;
                pn[1] = LogScalar::zero();
                pd[1] = LogScalar::zero();
                continue;
            }
            pn[i] = pn[i - 1] + dn;
            pd[i] = pd[i - 1] + dd;
        }

        auto exact_avg_log = [&](double a, double b) -> double {
            if (!(b > a)) return kNegInf;
            LogScalar den, num;
            try {
                den = measure_moment(w, n, a, b);
                num = f.moment(w, n, a, b);
            } catch (const DivergentMoment&) {
                return kNegInf; // only reachable for a = 0 edge rounding
            }
            if (den.is_zero()) return kNegInf;
            return (num / den).log();
        };

        PairShortlist shortlist(12);
        for (size_t i = first; i <= cand.r_index && i < m; ++i) {
            for (size_t j = std::max(cand.r_index, i + 1); j < m; ++j) {
                const LogScalar den = sub_clamped(pd[j], pd[i]);
                if (den.is_zero()) continue;
                const LogScalar num = sub_clamped(pn[j], pn[i]);
                shortlist.offer((num / den).log(), U[i], U[j]);
            }
        }
        if (shortlist.empty())
            throw InvalidInput("uncentered maximal: no admissible interval");

        BestPair best;
        for (const auto& p : shortlist.entries())
            best.offer(exact_avg_log(p.a, p.b), p.a, p.b);
        if (!best.found)
            throw InvalidInput("uncentered maximal: no admissible interval");

        // continuous refinement for non-piecewise-constant data
        if (!f.piecewise_constant()) {
            double a = best.a, b = best.b;
            for (int pass = 0; pass < 2; ++pass) {
                auto it = std::lower_bound(U.begin(), U.end(), a);
                const double alo = it == U.begin() ? 0.0 : *(it - 1);
                const double ahi = std::min(r, it + 1 == U.end() ? r : *(it + 1));
                if (ahi > alo) {
                    const double refined = golden_max(
                        [&](double x) { return exact_avg_log(x, b); }, alo, ahi,
                        opt.golden_iters);
                    if (exact_avg_log(refined, b) > exact_avg_log(a, b)) a = refined;
                }
                it = std::lower_bound(U.begin(), U.end(), b);
                const double blo = std::max(r, it == U.begin() ? r : *(it - 1));
                const double bhi = it + 1 >= U.end() ? plan.b_max : *(it + 1);
                if (bhi > blo) {
                    const double refined = golden_max(
                        [&](double x) { return exact_avg_log(a, x); }, blo, bhi,
                        opt.golden_iters);
                    if (exact_avg_log(a, refined) > exact_avg_log(a, b)) b = refined;
                }
            }
            best.offer(exact_avg_log(a, b), a, b);
        }

        // certify the truncation (auto window only)
        if (opt.b_max == 0.0 && !plan.f_tail.compact) {
            const double bound = tail_average_bound(w, n, plan.b_max, plan);
            if (bound > best.value_log + 1e-12 && round < 4) {
                plan.b_max *= 16.0;
                continue;
            }
            if (bound > best.value_log + 1e-9)
                throw TailNotControlled("uncentered maximal: tail bound exceeds best "
                                        "found value after window extension");
        }

        // limit average as b -> inf (flat tails) can dominate
        if (plan.has_limit && plan.limit_log > best.value_log) {
            ev.value = LogScalar::from_log(plan.limit_log);
            ev.witness_a = r;
            ev.witness_b = kInf;
            ev.method = MaximalEvaluation::Method::GridRefine;
            return ev;
        }

        // re-evaluate the winner exactly so value == average over witness
        const LogScalar den = measure_moment(w, n, best.a, best.b);
        const LogScalar num = f.moment(w, n, best.a, best.b);
        ev.value = num / den;
        ev.witness_a = best.a;
        ev.witness_b = best.b;
        ev.method = f.piecewise_constant()
                        ? MaximalEvaluation::Method::BreakpointExact
                        : MaximalEvaluation::Method::GridRefine;
        return ev;
    }
}

MaximalEvaluation annuli_maximal(const RadialData& f, double n, double r,
                                 const UncenteredOptions& opt) {
    return uncentered_maximal(f, std::nullopt, n, r, opt);
}

// ---------------------------------------------------------------------------
// level sets and Lorentz functionals

std::vector<double> geometric_grid(double lo, double hi, int points_per_decade) {
    if (!(lo > 0.0) || !(hi > lo) || points_per_decade < 1)
        throw InvalidInput("geometric_grid: requires 0 < lo < hi, ppd >= 1");
    const int steps = std::max(
        1, static_cast<int>(std::ceil(std::log10(hi / lo) * points_per_decade)));
    std::vector<double> g;
    g.reserve(steps + 1);
    const double ratio = std::log(hi / lo) / steps;
    for (int i = 0; i <= steps; ++i) g.push_back(lo * std::exp(ratio * i));
    g.back() = hi;
    return g;
}

RadialProfile tabulate_on_grid(const std::vector<double>& grid,
                               const std::vector<double>& values) {
    return RadialProfile::tabulated(grid, values);
}

LogScalar weighted_level_set_measure(const RadialProfile& g_tabulated,
                                     const RadialProfile& w, double n, double lambda,
                                     const LevelSetOptions& opt) {
    if (g_tabulated.kind() != RadialProfile::Kind::Tabulated)
        throw InvalidInput("level set measure: g must be tabulated");
    if (!(lambda > 0.0)) throw InvalidInput("level set measure: lambda must be > 0");
    const auto& grid = g_tabulated.grid();
    const auto& vals = g_tabulated.grid_values();

    // interior transitions must be resolved by the grid
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        const bool in_a = vals[i] > lambda;
        const bool in_b = vals[i + 1] > lambda;
        if (in_a == in_b) continue;
        const double hi = std::max(vals[i], vals[i + 1]);
        const double spread = hi > 0.0 ? std::fabs(vals[i] - vals[i + 1]) / hi : 0.0;
        if (spread > opt.straddle_tol)
            throw GridTooCoarse("level set boundary cell has relative spread " +
                                std::to_string(spread));
    }

    LogScalar total = LogScalar::zero();
    size_t i = 0;
    while (i < vals.size()) {
        if (vals[i] > lambda) {
            size_t j = i;
            while (j < vals.size() && vals[j] > lambda) ++j;
            total += weighted_moment(w, grid[i], grid[j], n);
            i = j;
        } else {
            ++i;
        }
    }
    return total;
}

double lorentz_weak_norm(const RadialProfile& g_tabulated, const RadialProfile& w,
                         double n, double p) {
    if (g_tabulated.kind() != RadialProfile::Kind::Tabulated)
        throw InvalidInput("lorentz_weak_norm: g must be tabulated");
    if (!(p >= 1.0)) throw InvalidInput("lorentz_weak_norm: p must be >= 1");
    const auto& grid = g_tabulated.grid();
    const auto& vals = g_tabulated.grid_values();
    std::vector<double> levels;
    for (double v : vals)
        if (v > 0.0) levels.push_back(v);
    if (levels.empty()) return 0.0;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    double best_log = kNegInf;
    for (double v : levels) {
        // measure of {g >= v}: the sup over lambda in [prev, v) is attained
        // in the limit lambda -> v
        LogScalar meas = LogScalar::zero();
        size_t i = 0;
        while (i < vals.size()) {
            if (vals[i] >= v) {
                size_t j = i;
                while (j < vals.size() && vals[j] >= v) ++j;
                meas += weighted_moment(w, grid[i], grid[j], n);
                i = j;
            } else {
                ++i;
            }
        }
        if (meas.is_zero()) continue;
        best_log = std::max(best_log, std::log(v) + meas.log() / p);
    }
    return std::isinf(best_log) && best_log < 0 ? 0.0 : std::exp(best_log);
}

double lorentz_n1_norm(const SimpleRadialFunction& f, const RadialProfile& w,
                       double n) {
    double total = 0.0;
    for (const auto& layer : f.layers()) {
        const LogScalar meas = layer.set.measure(&w, n);
        if (meas.is_zero()) continue;
        total += layer.coefficient * std::exp(meas.log() / n);
    }
    return total;
}

// ---------------------------------------------------------------------------
// weak (1,1) empirical constant

Weak11Witness weak11_empirical_constant(const RadialProfile& w, double n,
                                        const std::vector<SimpleRadialFunction>& fs,
                                        const std::vector<double>& lambda_grid,
                                        int tab_points_per_decade,
                                        const LevelSetOptions& opt) {
    Weak11Witness best;
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        const auto& f = fs[fi];
        if (f.empty()) continue;
        const LogScalar denom = f.weighted_integral(&w, n);
        if (denom.is_zero()) continue;

        // radius window: below the support the operator stays bounded; above
        // it decays like total / v_n([support_end, r])
        const auto bps = f.breakpoints();
        double first_pos = kInf;
        for (double b : bps)
            if (b > 0.0) first_pos = std::min(first_pos, b);
        const double s_end = f.support_end();
        if (std::isinf(s_end))
            throw InvalidInput("weak11: test functions must have compact support");
        const double lo = std::min(first_pos, s_end) / 1024.0;
        const double lambda_min =
            *std::min_element(lambda_grid.begin(), lambda_grid.end());
        const LogScalar total = f.weighted_integral(nullptr, n);
        // beyond B with (B^n - s_end^n)/n = 2 total / lambda_min the operator
        // sits below lambda_min/2, so the window [lo, B] covers the level sets
        const LogScalar bn = LogScalar::from_value(s_end).pow(n) +
                             LogScalar::from_value(2.0 * n / lambda_min) * total;
        const double hi = std::max(2.0 * s_end, std::exp(bn.log() / n));

        const auto grid = geometric_grid(lo, hi, tab_points_per_decade);
        std::vector<double> gv(grid.size() - 1);
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            auto ev = uncentered_maximal(RadialData(f), std::nullopt, n, grid[i]);
            gv[i] = std::exp(ev.value.log());
        }
        const RadialProfile tab = RadialProfile::tabulated(grid, gv);

        // measures are monotone in lambda; enforce after the fact
        std::vector<double> lambdas = lambda_grid;
        std::sort(lambdas.begin(), lambdas.end());
        LogScalar prev = LogScalar::infinity();
        for (double lam : lambdas) {
            LogScalar meas = weighted_level_set_measure(tab, w, n, lam, opt);
            if (meas > prev) meas = prev;
            prev = meas;
            if (meas.is_zero()) continue;
            const double c = std::exp(std::log(lam) + meas.log() - denom.log());
            if (c > best.constant) {
                best.constant = c;
                best.function_index = fi;
                best.lambda = lam;
            }
        }
    }
    return best;
}

} // namespace radmax
