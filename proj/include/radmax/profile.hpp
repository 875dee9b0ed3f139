#pragma once

#include "radmax/log_scalar.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace radmax {

// One power stretch c * t^gamma on [lo, hi). coeff may be 0 to encode a
// vanishing stretch (indicator-style weights need them). log_coeff is the
// authoritative magnitude in all moment formulas.
struct PowerPiece {
    double lo = 0.0;
    double hi = 0.0; // may be +inf
    double coeff = 1.0;
    double exponent = 0.0;
    double log_coeff = 0.0;

    PowerPiece() = default;
    PowerPiece(double lo_, double hi_, double coeff_, double exponent_);

    // log(c * t^gamma) with the right limits at t = 0 and t = +inf.
    double log_value(double t) const;
};

// Exact representation of a radial profile w0 : [0, inf) -> [0, +inf].
// Three forms:
//   - piecewise power: ordered pieces partitioning [0, inf), no gaps;
//   - shifted: t -> base(sqrt(rho^2 + t^2));
//   - tabulated: piecewise constant on grid cells [r_i, r_{i+1}), zero
//     outside the covered range.
// The canonical representative is right-continuous; essinf/esssup are the
// true pointwise inf/sup of that representative. Immutable after
// construction and safe to share across threads.
class RadialProfile {
public:
    enum class Kind { PiecewisePower, Shifted, Tabulated };

    static RadialProfile constant(double c);
    static RadialProfile power(double coeff, double exponent);
    static RadialProfile piecewise_power(std::vector<PowerPiece> pieces);
    // chi_[lo, hi) as a profile (coefficient `value` inside, 0 outside)
    static RadialProfile window(double lo, double hi, double value = 1.0);
    static RadialProfile shifted(RadialProfile base, double rho);
    static RadialProfile tabulated(std::vector<double> radii, std::vector<double> values);

    Kind kind() const;

    double value(double t) const;     // in [0, +inf]
    double log_value(double t) const; // log of value

    // Interior breakpoints of the representative, ascending, in (0, inf).
    std::vector<double> breakpoints() const;
    bool continuous_at(double t) const;

    double essinf(double a, double b) const;
    double esssup(double a, double b) const;

    // lambda * w0, exact in log space.
    RadialProfile scaled(double lambda) const;

    // Upper-bound descriptor of the tail t >= start: value <= coeff * t^exponent.
    // compact means the profile vanishes beyond start. exact means the bound
    // is an equality (plain power tail).
    struct Tail {
        double start = 0.0;
        double coeff = 0.0;
        double exponent = 0.0;
        bool compact = false;
        bool exact = false;
    };
    Tail tail() const;

    const std::vector<PowerPiece>& pieces() const; // PiecewisePower only
    const RadialProfile& base() const;             // Shifted only
    double rho() const;                            // Shifted only
    const std::vector<double>& grid() const;       // Tabulated only
    const std::vector<double>& grid_values() const;

    friend RadialProfile multiply(const RadialProfile& f, const RadialProfile& g);

private:
    struct Shifted_ {
        std::shared_ptr<const RadialProfile> base;
        double rho;
    };
    struct Tabulated_ {
        std::vector<double> radii;
        std::vector<double> values;
        std::vector<double> log_values;
    };
    using Rep = std::variant<std::vector<PowerPiece>, Shifted_, Tabulated_>;
    explicit RadialProfile(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

// Pointwise product of two piecewise-power profiles, exact.
RadialProfile multiply(const RadialProfile& f, const RadialProfile& g);

// integral of t^{n-1} over [a, b], closed form in log space.
LogScalar vn_measure(double a, double b, double n);

// integral of w0(t) t^{n-1} over [a, b]. Piecewise-power profiles use exact
// per-piece closed forms; shifted/tabulated profiles go through adaptive
// log-domain quadrature (relative tolerance rel_tol, endpoint-concentration
// substitution t = b e^{-s/n} once n > 50). Throws DivergentMoment when the
// integral does not exist.
LogScalar weighted_moment(const RadialProfile& w, double a, double b, double n,
                          double rel_tol = 1e-10);

// Forces the quadrature path regardless of profile kind. This is the
// cross-check route for the closed forms; it never consults them.
LogScalar weighted_moment_quadrature(const RadialProfile& w, double a, double b,
                                     double n, double rel_tol = 1e-10);

// integral of (1-t)^{-alpha} t^{n-1} over [0,1] = Gamma(1-alpha) Gamma(n) /
// Gamma(n+1-alpha), via the in-repo log-gamma.
LogScalar beta_moment(double alpha, double n);

} // namespace radmax
