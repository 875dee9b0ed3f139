#include "radmax/acceptance.hpp"

#include "radmax/a1.hpp"
#include "radmax/ball.hpp"
#include "radmax/errors.hpp"
#include "radmax/generators.hpp"
#include "radmax/kakeya.hpp"
#include "radmax/maximal.hpp"
#include "radmax/oracles.hpp"
#include "radmax/profile.hpp"
#include "radmax/thread_pool.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace radmax {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5EEDF00D2024ULL;

double tick() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

void track_margin(CriterionResult& res, double slack) {
    if (!std::isnan(slack)) res.margin = std::min(res.margin, slack);
}

RadialProfile inverse_sqrt_weight() { return RadialProfile::power(1.0, -0.5); }

// ---------------------------------------------------------------------------

CriterionResult c1_growth(unsigned) {
    CriterionResult res{"c1", "gamma-ratio growth law", true, false, 1e300};
    for (double alpha : {0.3, 0.6, 0.9}) {
        const std::vector<double> schedule{10.0, 1e2, 1e3, 1e4, 1e6};
        const auto curve = growth_example_curve(alpha, schedule);
        for (const auto& p : curve) {
            if (!p.holds) res.pass = false;
            track_margin(res, p.log_ratio - p.log_floor);
        }
        const double final_ratio = curve.back().ratio_over_floor;
        if (!(final_ratio <= 1.05)) res.pass = false;
        track_margin(res, 1.05 - final_ratio);
    }
    return res;
}

CriterionResult c2_a1_brackets(unsigned threads) {
    CriterionResult res{"c2", "a1 bracket uniformity for t^-1/2", true, false, 1e300};
    const auto w = inverse_sqrt_weight();
    const std::vector<double> schedule{2, 4, 8, 16, 32, 64};
    const auto sweep = a1_dimension_sweep(w, schedule, {}, threads);
    const double cap = 4.0 * std::sqrt(2.0);
    std::ostringstream detail;
    for (const auto& e : sweep) {
        if (!(e.lower >= 1.0 && e.lower <= cap * (1.0 + 1e-9))) res.pass = false;
        track_margin(res, (cap - e.lower) / cap);
        if (!(std::fabs(e.upper - cap) <= 1e-9 * cap)) res.pass = false;
        if (!e.transport_ok) res.pass = false;
        detail << "n=" << e.n << " lower=" << e.lower << "  ";
    }
    res.detail = detail.str();
    return res;
}

CriterionResult c3_ring_domination(unsigned threads) {
    CriterionResult res{"c3", "centered balls vs rings (factor 2)", true, false,
                        1e300};
    const double rel_tol = 1e-6 + 1e-6; // stated tolerance + quadrature allowance
    struct Task {
        double n;
        size_t profile;
        double r;
    };
    std::vector<RadialProfile> profiles;
    for (int j = 0; j < 20; ++j) {
        SplitMix64 rng(derive_seed(kSuiteSeed, 0x300 + j));
        profiles.push_back(random_profile(rng, true));
    }
    std::vector<Task> tasks;
    for (double n : {2.0, 3.0, 5.0})
        for (size_t pi = 0; pi < profiles.size(); ++pi) {
            SplitMix64 rng(derive_seed(kSuiteSeed, 0x340 + static_cast<int>(pi)));
            for (int k = 0; k < 16; ++k)
                tasks.push_back({n, pi, rng.log_uniform(0.05, 20.0)});
        }

    CenteredMaximalOptions copt;
    copt.grid_per_decade = 12;
    copt.r_lo_factor = 1e-3;
    copt.ball.rel_tol = 1e-8;

    std::vector<double> slacks(tasks.size());
    std::vector<char> oks(tasks.size(), 1);
    parallel_for(tasks.size(), threads, [&](size_t i) {
        const auto& t = tasks[i];
        const auto& w = profiles[t.profile];
        double scale = t.r;
        for (double bp : w.breakpoints()) scale = std::max(scale, bp);
        const auto ball = centered_ball_maximal(w, t.n, t.r, 8.0 * scale, copt);
        const auto ring = annuli_maximal(RadialData(w), t.n, t.r);
        const double rhs = 2.0 * std::exp(ring.value.log());
        oks[i] = ball.value <= rhs * (1.0 + rel_tol);
        slacks[i] = (rhs - ball.value) / rhs;
    });
    for (size_t i = 0; i < tasks.size(); ++i) {
        if (!oks[i]) res.pass = false;
        track_margin(res, slacks[i]);
    }
    return res;
}

CriterionResult c4_weak_type(unsigned threads) {
    CriterionResult res{"c4", "weak (1,1) with the selection constant", true, false,
                        1e300};
    const auto battery = standard_battery();
    const std::vector<RadialProfile> weights{RadialProfile::constant(1.0),
                                             inverse_sqrt_weight()};
    LevelSetOptions lso;
    lso.straddle_tol = 0.25; // 1024 cells/decade cannot do better at n = 32

    for (const auto& w : weights) {
        const auto cc = condition_c_constants(w);
        for (double n : {2.0, 8.0, 32.0}) {
            const double upper = a1_upper_from_condc(cc, n);

            // ring-operator tabulations are weight independent
            std::vector<RadialProfile> tabs(battery.size(),
                                            RadialProfile::constant(0.0));
            std::vector<double> gmax(battery.size(), 0.0);
            parallel_for(battery.size(), threads, [&](size_t fi) {
                const auto& f = battery[fi];
                double first_pos = f.support_end();
                for (double b : f.breakpoints())
                    if (b > 0.0) first_pos = std::min(first_pos, b);
                double height = 0.0;
                for (const auto& layer : f.layers()) height += layer.coefficient;
                const LogScalar total = f.weighted_integral(nullptr, n);
                const LogScalar bn =
                    LogScalar::from_value(f.support_end()).pow(n) +
                    LogScalar::from_value(2.0 * n / (height * 1e-4)) * total;
                const auto grid =
                    geometric_grid(first_pos / 1024.0,
                                   std::max(2.0 * f.support_end(),
                                            std::exp(bn.log() / n)),
                                   1024);
                std::vector<double> gv(grid.size() - 1);
                for (size_t i = 0; i + 1 < grid.size(); ++i)
                    gv[i] = std::exp(
                        uncentered_maximal(RadialData(f), std::nullopt, n, grid[i])
                            .value.log());
                gmax[fi] = *std::max_element(gv.begin(), gv.end());
                tabs[fi] = RadialProfile::tabulated(grid, gv);
            });

            for (size_t fi = 0; fi < battery.size(); ++fi) {
                const double rhs =
                    2.0 * upper *
                    std::exp(battery[fi].weighted_integral(&w, n).log());
                LogScalar prev = LogScalar::infinity();
                for (int li = 0; li < 64; ++li) {
                    const double frac = std::pow(1e-3, 1.0 - li / 63.0);
                    const double lambda = gmax[fi] * frac * (1.0 - 1e-9);
                    LogScalar meas =
                        weighted_level_set_measure(tabs[fi], w, n, lambda, lso);
                    if (meas > prev) meas = prev;
                    prev = meas;
                    const double lhs = lambda * std::exp(meas.log());
                    if (!(lhs <= rhs * (1.0 + 1e-9))) res.pass = false;
                    track_margin(res, (rhs - lhs) / rhs);
                }
            }
        }
    }
    return res;
}

CriterionResult c5_segment_bound(unsigned threads) {
    CriterionResult res{"c5", "segment-vs-rings bound and sharpness", true, false,
                        1e300};
    const int trials = 10000;
    const std::vector<double> ks{2.0, 3.0, 5.0};
    std::vector<double> ratios(trials * ks.size());
    parallel_for(ratios.size(), threads, [&](size_t idx) {
        const size_t trial = idx / ks.size();
        SplitMix64 rng(derive_seed(kSuiteSeed, 0x500 + trial));
        const auto E0 = random_indicator_set(rng);
        const auto seg = random_segment(rng);
        const auto r = segment_ring_bound(seg, E0, ks[idx % ks.size()], 1e-9);
        ratios[idx] = r.ratio;
    });
    for (double rt : ratios) {
        if (!(rt <= 1.0 + 1e-9)) res.pass = false;
        track_margin(res, 1.0 + 1e-9 - rt);
    }

    double prev_observed = 0.0;
    for (double frac : {1e-1, 1e-2, 1e-3}) {
        SharpnessConfig sc;
        sc.L = 4.0;
        sc.ell = frac * sc.L;
        const auto seg = sc.segment();
        const auto ann = sc.annulus();
        const double lhs = segment_radius_intersection(seg, ann) / seg.length();
        const auto ring = uncentered_maximal(RadialData(ann), std::nullopt, 2.0,
                                             seg.r0);
        const double observed = lhs / std::sqrt(std::exp(ring.value.log()));
        const double floor = 2.0 - 2.0 * frac;
        if (!(observed >= floor)) res.pass = false;
        if (!(observed >= prev_observed)) res.pass = false;
        track_margin(res, observed - floor);
        prev_observed = observed;
    }
    return res;
}

CriterionResult c6_restricted_weak_type(unsigned threads) {
    CriterionResult res{"c6", "restricted weak type for the universal operator",
                        true, false, 1e300};
    const auto battery = standard_battery();
    const std::vector<size_t> chosen{0, 3, 4, 7, 9}; // nested-layer members
    RestrictedWeakTypeOptions opt;
    opt.radius_points = 128;
    opt.universal.phi_points = 128;
    opt.threads = threads;
    for (const auto& w :
         {RadialProfile::constant(1.0), inverse_sqrt_weight()}) {
        for (double n : {2.0, 4.0, 8.0}) {
            for (size_t fi : chosen) {
                const auto r = restricted_weak_type_check(battery[fi], w, n, opt);
                if (!r.pass) res.pass = false;
                if (r.rhs > 0.0) track_margin(res, (r.rhs - r.lhs) / r.rhs);
            }
        }
    }
    return res;
}

CriterionResult c7_dimension_limit(unsigned threads) {
    CriterionResult res{"c7", "ball averages converge through dimensions", true,
                        false, 1e300};
    DimensionLimitSpec spec;
    spec.T = 1.0;
    spec.center_radius = 0.6;
    for (int j = 1; j <= 14; ++j) spec.schedule.push_back(std::pow(2.0, j));
    const auto curve = dimension_limit_curve(inverse_sqrt_weight(), spec, threads);
    res.pass = curve.converged;
    track_margin(res, 0.01 - curve.points.back().error);
    std::ostringstream ss;
    ss << "final error " << curve.points.back().error;
    res.detail = ss.str();
    return res;
}

CriterionResult c8_shifted_weights(unsigned threads) {
    CriterionResult res{"c8", "shifted weights stay pointwise dominated", true,
                        false, 1e300};
    std::vector<double> radii;
    for (int i = 0; i < 32; ++i)
        radii.push_back(0.05 * std::pow(1e3, i / 31.0)); // 0.05 .. 50 geometric
    const auto rep = shifted_a1_check(inverse_sqrt_weight(), 3.0,
                                      {0.0, 0.5, 2.0, 10.0}, radii, 1e-6, threads);
    res.pass = rep.all_pass;
    track_margin(res, 1.0 + 1e-6 - rep.max_ratio);
    std::ostringstream ss;
    ss << "max lhs/rhs " << rep.max_ratio;
    res.detail = ss.str();
    return res;
}

CriterionResult c9_oracles(unsigned threads) {
    CriterionResult res{"c9", "oracle cross-checks", true, false, 1e300};

    // closed-form moments vs adaptive quadrature
    {
        std::vector<double> devs(200);
        parallel_for(devs.size(), threads, [&](size_t i) {
            SplitMix64 rng(derive_seed(kSuiteSeed, 0x900 + static_cast<int>(i)));
            const auto w = random_profile(rng, rng.uniform01() < 0.5);
            const double a = rng.log_uniform(1e-3, 10.0);
            const double b = a * rng.log_uniform(1.2, 100.0);
            const double n = 1.0 + rng.uniform(0.0, 199.0);
            devs[i] = std::fabs(std::expm1(weighted_moment_quadrature(w, a, b, n).log() -
                                            weighted_moment(w, a, b, n).log()));
        });
        for (double d : devs) {
            if (!(d < 1e-8)) res.pass = false;
            track_margin(res, 1e-8 - d);
        }
    }

    // optimizer vs dense interval grid
    {
        std::vector<double> shortfalls(100);
        parallel_for(shortfalls.size(), threads, [&](size_t i) {
            SplitMix64 rng(derive_seed(kSuiteSeed, 0xA00 + static_cast<int>(i)));
            const auto w = random_profile(rng, true);
            const double r = rng.log_uniform(0.05, 20.0);
            const double n = 2.0 + static_cast<double>(rng.below(7));
            const auto ev = uncentered_maximal(RadialData(w), std::nullopt, n, r);
            double b_hi = 64.0 * std::max(r, 1.0);
            for (double bp : w.breakpoints()) b_hi = std::max(b_hi, 8.0 * bp);
            const double oracle =
                uncentered_dense_oracle(RadialData(w), nullptr, n, r, b_hi, 512);
            shortfalls[i] = std::expm1(oracle - ev.value.log());
        });
        for (double s : shortfalls) {
            if (!(s <= 1e-4)) res.pass = false;
            track_margin(res, 1e-4 - s);
        }
    }

    // exact segment intersections vs Monte Carlo
    {
        std::vector<double> slack(100);
        parallel_for(slack.size(), threads, [&](size_t i) {
            SplitMix64 rng(derive_seed(kSuiteSeed, 0xB00 + static_cast<int>(i)));
            const auto E0 = random_indicator_set(rng);
            const auto seg = random_segment(rng);
            const double exact = segment_radius_intersection(seg, E0);
            const auto mc = segment_intersection_mc(
                seg, E0, 1000000, derive_seed(kSuiteSeed, 0xC00 + static_cast<int>(i)));
            slack[i] = 3.0 * mc.sigma + 1e-12 - std::fabs(exact - mc.value);
        });
        for (double s : slack) {
            if (!(s >= 0.0)) res.pass = false;
            track_margin(res, s);
        }
    }
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& filter,
                                            unsigned threads, std::ostream& log) {
    using Runner = CriterionResult (*)(unsigned);
    const std::vector<std::pair<std::string, Runner>> criteria = {
        {"c1", &c1_growth},        {"c2", &c2_a1_brackets},
        {"c3", &c3_ring_domination}, {"c4", &c4_weak_type},
        {"c5", &c5_segment_bound}, {"c6", &c6_restricted_weak_type},
        {"c7", &c7_dimension_limit}, {"c8", &c8_shifted_weights},
        {"c9", &c9_oracles},
    };
    std::vector<CriterionResult> results;
    for (const auto& [id, runner] : criteria) {
        if (!filter.empty() && id.find(filter) == std::string::npos) {
            CriterionResult skipped;
            skipped.id = id;
            skipped.skipped = true;
            skipped.label = "(skipped by filter)";
            results.push_back(skipped);
            log << id << "  SKIP\n";
            continue;
        }
        const double t0 = tick();
        CriterionResult r;
        try {
            r = runner(threads);
        } catch (const std::exception& e) {
            r.id = id;
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = tick() - t0;
        results.push_back(r);
        log << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  margin="
            << std::setprecision(6) << r.margin << "  " << std::fixed
            << std::setprecision(1) << r.seconds << "s  " << r.label
            << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        log.unsetf(std::ios::fixed);
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.skipped && !r.pass) return false;
    return true;
}

} // namespace radmax
