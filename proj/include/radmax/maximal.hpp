#pragma once

#include "radmax/log_scalar.hpp"
#include "radmax/profile.hpp"
#include "radmax/radial_sets.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace radmax {

// Input data for the one-dimensional maximal operators: either an exact
// profile or a simple (layered indicator) function.
class RadialData {
public:
    RadialData(RadialProfile p) : rep_(std::move(p)) {}
    RadialData(SimpleRadialFunction f) : rep_(std::move(f)) {}
    RadialData(RadialIndicatorSet s)
        : rep_(SimpleRadialFunction({{1.0, std::move(s)}})) {}

    bool is_profile() const { return rep_.index() == 0; }
    const RadialProfile& profile() const { return std::get<RadialProfile>(rep_); }
    const SimpleRadialFunction& simple() const {
        return std::get<SimpleRadialFunction>(rep_);
    }

    double value(double t) const;
    std::vector<double> breakpoints() const;
    // piecewise-constant data admits an exact breakpoint optimizer
    bool piecewise_constant() const;

    // integral of f dv over [a,b], v = w0 t^{n-1} dt (w may be null)
    LogScalar moment(const RadialProfile* w, double n, double a, double b) const;

private:
    std::variant<RadialProfile, SimpleRadialFunction> rep_;
};

struct MaximalEvaluation {
    LogScalar value;       // sup of averages; LogScalar::infinity() when divergent
    double witness_a = 0.0;
    double witness_b = 0.0; // +inf for tail witnesses
    enum class Method { BreakpointExact, GridRefine } method = Method::GridRefine;
    int grid_per_decade = 0; // resolution metadata (0 = exact path)
    bool truncated = false;  // search window was user-truncated, sup is a lower bound
};

struct UncenteredOptions {
    // 0 = derive a certified truncation radius from the tail; > 0 forces an
    // explicit window and marks the result truncated.
    double b_max = 0.0;
    int grid_per_decade = 32;
    int golden_iters = 40;
    double quad_rel_tol = 1e-10;
};

// sup over intervals [a,b] containing r of (1/v([a,b])) * integral of f dv,
// v = w0(t) t^{n-1} dt when a density is given, else t^{n-1} dt.
MaximalEvaluation uncentered_maximal(const RadialData& f,
                                     const std::optional<RadialProfile>& w_density,
                                     double n, double r,
                                     const UncenteredOptions& opt = {});

// The maximal operator over centered rings acting on radial data equals the
// 1-D uncentered operator against t^{n-1}; kept as a named entry point.
MaximalEvaluation annuli_maximal(const RadialData& f, double n, double r,
                                 const UncenteredOptions& opt = {});

struct LevelSetOptions {
    // relative value spread allowed in a cell adjacent to a level-set
    // transition; beyond it the tabulation cannot resolve the boundary
    double straddle_tol = 1e-3;
};

// w0 v_n measure of {g > lambda} for g tabulated (piecewise constant on its
// grid cells). Reported in the radial-moment convention: the common
// spherical surface factor is dropped, as it cancels in every ratio this
// feeds. Throws GridTooCoarse per LevelSetOptions.
LogScalar weighted_level_set_measure(const RadialProfile& g_tabulated,
                                     const RadialProfile& w, double n, double lambda,
                                     const LevelSetOptions& opt = {});

// Geometric tabulation grid helper: points_per_decade over [lo, hi].
std::vector<double> geometric_grid(double lo, double hi, int points_per_decade);

// Tabulate r -> value on a geometric grid as a piecewise-constant profile.
RadialProfile tabulate_on_grid(const std::vector<double>& grid,
                               const std::vector<double>& values);

struct Weak11Witness {
    double constant = 0.0; // max of lambda * w(level set) / integral
    size_t function_index = 0;
    double lambda = 0.0;
};

// Empirical lower-bound witness for the best weak-(1,1) constant of the
// annuli operator against w0 v_n.
Weak11Witness weak11_empirical_constant(const RadialProfile& w, double n,
                                        const std::vector<SimpleRadialFunction>& fs,
                                        const std::vector<double>& lambda_grid,
                                        int tab_points_per_decade = 4096,
                                        const LevelSetOptions& opt = {});

// sup_lambda lambda * w({g > lambda})^{1/p} over the grid of g's distinct
// values (g tabulated piecewise-constant).
double lorentz_weak_norm(const RadialProfile& g_tabulated, const RadialProfile& w,
                         double n, double p);

// sum_j c_j w(E_j)^{1/n} for nested simple functions.
double lorentz_n1_norm(const SimpleRadialFunction& f, const RadialProfile& w, double n);

} // namespace radmax
