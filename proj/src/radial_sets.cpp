#include "radmax/radial_sets.hpp"

#include "radmax/errors.hpp"
#include "radmax/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

namespace radmax {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

RadialIndicatorSet RadialIndicatorSet::from_intervals(std::vector<Interval> intervals) {
    if (intervals.empty())
        throw InvalidInput("RadialIndicatorSet: needs at least one interval");
    std::sort(intervals.begin(), intervals.end());
    for (const auto& [lo, hi] : intervals)
        if (!(lo >= 0.0) || !(hi > lo))
            throw InvalidInput("RadialIndicatorSet: intervals need 0 <= lo < hi");
    for (size_t i = 0; i + 1 < intervals.size(); ++i)
        if (intervals[i].second > intervals[i + 1].first)
            throw InvalidInput("RadialIndicatorSet: intervals must be disjoint");
    RadialIndicatorSet s;
    s.intervals_ = std::move(intervals);
    return s;
}

RadialIndicatorSet RadialIndicatorSet::full() { return single(0.0, kInf); }

RadialIndicatorSet RadialIndicatorSet::single(double lo, double hi) {
    return from_intervals({{lo, hi}});
}

bool RadialIndicatorSet::contains(double t) const {
    for (const auto& [lo, hi] : intervals_)
        if (t >= lo && t < hi) return true;
    return false;
}

bool RadialIndicatorSet::covers(const RadialIndicatorSet& other) const {
    // every interval of `other` must sit inside one of ours
    for (const auto& [lo, hi] : other.intervals_) {
        bool ok = false;
        for (const auto& [mlo, mhi] : intervals_)
            if (mlo <= lo && hi <= mhi) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::vector<double> RadialIndicatorSet::breakpoints() const {
    std::vector<double> out;
    for (const auto& [lo, hi] : intervals_) {
        out.push_back(lo);
        if (!std::isinf(hi)) out.push_back(hi);
    }
    return out;
}

LogScalar RadialIndicatorSet::measure(const RadialProfile* w, double n, double a,
                                      double b) const {
    LogScalar total = LogScalar::zero();
    for (const auto& [lo, hi] : intervals_) {
        const double c = std::max(a, lo);
        const double d = std::min(b, hi);
        if (!(d > c)) continue;
        total += w ? weighted_moment(*w, c, d, n) : vn_measure(c, d, n);
    }
    return total;
}

double RadialIndicatorSet::length(double a, double b) const {
    double total = 0.0;
    for (const auto& [lo, hi] : intervals_) {
        const double c = std::max(a, lo);
        const double d = std::min(b, hi);
        if (d > c) total += d - c;
    }
    return total;
}

std::uint64_t RadialIndicatorSet::digest() const {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    auto mix = [&h](double x) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, sizeof(bits));
        h = SplitMix64(h ^ bits).next();
    };
    for (const auto& [lo, hi] : intervals_) {
        mix(lo);
        mix(hi);
    }
    return h;
}

// ---------------------------------------------------------------------------

SimpleRadialFunction::SimpleRadialFunction(std::vector<Layer> layers) {
    for (const auto& l : layers)
        if (!(l.coefficient > 0.0))
            throw InvalidInput("SimpleRadialFunction: coefficients must be > 0");
    for (size_t i = 0; i + 1 < layers.size(); ++i)
        if (!layers[i].set.covers(layers[i + 1].set))
            throw InvalidInput("SimpleRadialFunction: layers must be nested");
    layers_ = std::move(layers);
}

double SimpleRadialFunction::value(double t) const {
    double v = 0.0;
    for (const auto& l : layers_)
        if (l.set.contains(t)) v += l.coefficient;
    return v;
}

std::vector<double> SimpleRadialFunction::breakpoints() const {
    std::vector<double> out;
    for (const auto& l : layers_) {
        auto bp = l.set.breakpoints();
        out.insert(out.end(), bp.begin(), bp.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double SimpleRadialFunction::support_end() const {
    double end = 0.0;
    for (const auto& l : layers_) end = std::max(end, l.set.max_radius());
    return end;
}

LogScalar SimpleRadialFunction::weighted_integral(const RadialProfile* w, double n,
                                                  double a, double b) const {
    LogScalar total = LogScalar::zero();
    for (const auto& l : layers_)
        total += LogScalar::from_value(l.coefficient) * l.set.measure(w, n, a, b);
    return total;
}

} // namespace radmax
