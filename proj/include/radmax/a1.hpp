#pragma once

#include "radmax/maximal.hpp"
#include "radmax/profile.hpp"

#include <vector>

namespace radmax {

// Dyadic oscillation and decrease-up-to-a-constant descriptors:
//   beta = sup_R esssup_{[R,2R]} w0 / essinf_{[R,2R]} w0
//   eta  = sup_{s >= t} w0(s) / w0(t)
struct ConditionCConstants {
    double beta = 1.0;
    double eta = 1.0;
    bool beta_finite = true;
    bool eta_finite = true;
};

ConditionCConstants condition_c_constants(const RadialProfile& w);

// Certified upper bound max(beta, 4 beta eta), valid for n > log2(beta) + 1;
// +inf when no certificate applies at this dimension.
double a1_upper_from_condc(const ConditionCConstants& cc, double n);

struct A1Estimate {
    double n = 0.0;
    double lower = 1.0;  // witnessed interval ratio; >= 1 always
    double upper = 0.0;  // +inf when no certificate
    double witness_a = 0.0;
    double witness_b = 0.0;
    enum class Certificate { CondC, Transport, None } certificate = Certificate::None;
    bool window_limited = false;
    bool transport_ok = true; // lower(n) <= (n/k) upper(k) for schedule k <= n
};

struct A1SearchOptions {
    double window_lo = 1e-6;
    double window_hi = 1e6;
    int dyadic_per_decade = 4; // dyadic endpoints: 2^k spacing ~ 3.3/decade
    int golden_iters = 40;
};

// max over intervals [a,b] of (w0 v_n([a,b]) / v_n([a,b])) / essinf_[a,b] w0.
A1Estimate a1_lower_bound(const RadialProfile& w, double n,
                          const A1SearchOptions& opt = {});

// Lower bounds per scheduled dimension, each bracketed by the best available
// certificate (condition (c) at n, or transported (n/k) upper(k)), plus the
// cross-dimension transport consistency flags.
std::vector<A1Estimate> a1_dimension_sweep(const RadialProfile& w,
                                           const std::vector<double>& schedule,
                                           const A1SearchOptions& opt = {},
                                           unsigned threads = 1);

// Growth curve of the boundary-singular example: ratio(n) = n B(1-alpha, n)
// against the floor Gamma(1-alpha) n^alpha, compared in log domain.
struct GrowthPoint {
    double n;
    double log_ratio;
    double log_floor;
    double ratio_over_floor;
    bool holds; // log_ratio >= log_floor with zero slack
};

std::vector<GrowthPoint> growth_example_curve(double alpha,
                                              const std::vector<double>& schedule);

// Shifted-weight pointwise bound: for w decreasing piecewise power and
// w_rho(t) = w0(sqrt(rho^2 + t^2)),
//   M~_{v_k} w_rho (r) <= (k/2) * upper((w)_{A1,k}) * w_rho(r).
struct ShiftedCheckRow {
    double rho;
    double r;
    double lhs;
    double rhs;
    bool pass;
};

struct ShiftedCheckReport {
    std::vector<ShiftedCheckRow> rows;
    double max_ratio = 0.0; // max lhs/rhs
    bool all_pass = true;
    double a1_upper = 0.0;
};

ShiftedCheckReport shifted_a1_check(const RadialProfile& w, double k,
                                    const std::vector<double>& rho_schedule,
                                    const std::vector<double>& r_samples,
                                    double rel_tol = 1e-6, unsigned threads = 1);

// Empirical lower-bound witness for the dimensional constant in the
// two-sided ring comparison: max over samples of
// (annuli maximal) / (centered ball maximal).
struct RingComparisonWitness {
    double max_ratio = 0.0;
    size_t profile_index = 0;
    double radius = 0.0;
};

RingComparisonWitness
ring_comparison_witness(double n, const std::vector<RadialProfile>& profiles,
                        const std::vector<double>& radii, double R_max_factor = 8.0,
                        unsigned threads = 1);

} // namespace radmax
