#pragma once

#include "radmax/log_scalar.hpp"
#include "radmax/profile.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace radmax {

// Finite union of radius intervals [lo, hi), disjoint and sorted. The radial
// projection of a radial set lives here; intervals may be unbounded on the
// right.
class RadialIndicatorSet {
public:
    using Interval = std::pair<double, double>;

    static RadialIndicatorSet from_intervals(std::vector<Interval> intervals);
    static RadialIndicatorSet full();
    static RadialIndicatorSet single(double lo, double hi);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool contains(double t) const;
    bool covers(const RadialIndicatorSet& other) const; // superset, interval-wise

    double min_radius() const { return intervals_.front().first; }
    double max_radius() const { return intervals_.back().second; } // may be +inf
    std::vector<double> breakpoints() const;

    // integral of w0(t) t^{n-1} over the set clipped to [a, b]; w may be null
    // (plain v_n measure).
    LogScalar measure(const RadialProfile* w, double n, double a = 0.0,
                      double b = std::numeric_limits<double>::infinity()) const;

    // 1-D Lebesgue measure of the set clipped to [a, b].
    double length(double a, double b) const;

    std::uint64_t digest() const; // stable 64-bit fingerprint for trial records

private:
    std::vector<Interval> intervals_;
};

// f = sum_j c_j chi_{E_j} with nested layers E_1 >= E_2 >= ... (verified).
class SimpleRadialFunction {
public:
    struct Layer {
        double coefficient;
        RadialIndicatorSet set;
    };

    explicit SimpleRadialFunction(std::vector<Layer> layers);

    const std::vector<Layer>& layers() const { return layers_; }
    bool empty() const { return layers_.empty(); }

    double value(double t) const;
    std::vector<double> breakpoints() const;
    double support_end() const; // may be +inf

    // integral of f(t) w0(t) t^{n-1} over [a, b]
    LogScalar weighted_integral(const RadialProfile* w, double n, double a = 0.0,
                                double b = std::numeric_limits<double>::infinity()) const;

private:
    std::vector<Layer> layers_;
};

} // namespace radmax
