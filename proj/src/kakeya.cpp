#include "radmax/kakeya.hpp"

#include "radmax/a1.hpp"

#include "radmax/errors.hpp"
#include "radmax/golden.hpp"
#include "radmax/thread_pool.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radmax {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

double Segment2D::foot_offset() const { return -r0 * std::cos(phi); }

double Segment2D::min_radius() const {
    const double sf = foot_offset();
    if (sf >= a && sf <= b) return r0 * std::fabs(std::sin(phi));
    return std::min(radius_at(a), radius_at(b));
}

double Segment2D::radius_at(double s) const {
    // |x + s u|^2 = r0^2 + 2 r0 s cos(phi) + s^2 = (s - s_foot)^2 + d^2
    const double sf = foot_offset();
    const double d = r0 * std::sin(phi);
    return std::hypot(s - sf, d);
}

void Segment2D::validate() const {
    if (!(r0 >= 0.0) || !(phi >= 0.0) || !(phi <= M_PI))
        throw InvalidInput("Segment2D: requires r0 >= 0 and phi in [0, pi]");
    if (!(a <= 0.0) || !(b >= 0.0) || !(b - a > 0.0))
        throw InvalidInput("Segment2D: requires a <= 0 <= b with b > a");
}

double segment_radius_intersection(const Segment2D& seg, const RadialIndicatorSet& E0) {
    seg.validate();
    const double sf = seg.foot_offset();
    const double d = seg.r0 * std::sin(seg.phi);
    const double d2 = d * d;

    // measure of { s in [a,b] : radius(s) <= rho }: an interval around the foot
    auto sub_level_length = [&](double rho) -> double {
        if (std::isinf(rho)) return seg.b - seg.a;
        const double h2 = rho * rho - d2;
        if (h2 <= 0.0) return 0.0;
        const double h = std::sqrt(h2);
        const double lo = std::max(seg.a, sf - h);
        const double hi = std::min(seg.b, sf + h);
        return hi > lo ? hi - lo : 0.0;
    };

    double total = 0.0;
    for (const auto& [r1, r2] : E0.intervals())
        total += sub_level_length(r2) - sub_level_length(r1);
    return total;
}

SegmentBoundResult segment_ring_bound(const Segment2D& seg,
                                       const RadialIndicatorSet& E0, double k,
                                       double rel_tol) {
    if (!(k >= 2.0)) throw InvalidInput("segment_ring_bound: k must be >= 2");
    SegmentBoundResult res;
    res.lhs = segment_radius_intersection(seg, E0) / seg.length();
    const auto ev = uncentered_maximal(RadialData(E0), std::nullopt, k, seg.r0);
    res.rhs = 2.0 * std::exp(ev.value.log() / k);
    res.ratio = res.rhs > 0.0 ? res.lhs / res.rhs : (res.lhs > 0.0 ? kInf : 0.0);
    res.pass = res.lhs <= res.rhs * (1.0 + rel_tol);
    return res;
}

// ---------------------------------------------------------------------------
// universal maximal operator on radial indicator data

namespace {

// best segment average at fixed phi: endpoints of the optimum sit at radius
// crossings of the set boundary (or at the point itself), so enumerate them
double best_average_at_phi(const RadialIndicatorSet& E0, double r0, double phi,
                           double min_length) {
    const double sf = -r0 * std::cos(phi);
    const double d = r0 * std::sin(phi);
    const double d2 = d * d;

    std::vector<double> neg{0.0}, pos{0.0};
    auto add = [&](double s) {
        if (s < 0.0) neg.push_back(s);
        else pos.push_back(s);
    };
    for (double bp : E0.breakpoints()) {
        const double h2 = bp * bp - d2;
        if (h2 <= 0.0) continue;
        const double h = std::sqrt(h2);
        add(sf - h);
        add(sf + h);
    }
    std::sort(neg.begin(), neg.end());
    std::sort(pos.begin(), pos.end());

    Segment2D seg;
    seg.r0 = r0;
    seg.phi = phi;
    double best = 0.0;
    for (double a : neg) {
        for (double b : pos) {
            if (!(b - a > min_length)) continue;
            seg.a = a;
            seg.b = b;
            const double avg = segment_radius_intersection(seg, E0) / (b - a);
            best = std::max(best, avg);
        }
    }
    return best;
}

} // namespace

double universal_maximal_radial(const RadialIndicatorSet& E0, double r0,
                                const UniversalOptions& opt) {
    if (!(r0 >= 0.0)) throw InvalidInput("universal_maximal_radial: r0 >= 0");
    if (E0.contains(r0)) return 1.0; // a short segment inside the set

    double best = 0.0;
    double best_phi = 0.5 * M_PI;
    for (int i = 0; i < opt.phi_points; ++i) {
        // phi and pi - phi give mirrored segments; [0, pi/2] suffices with
        // both offset signs enumerated, but scan [0, pi] as specified
        const double phi = M_PI * (i + 0.5) / opt.phi_points;
        const double v = best_average_at_phi(E0, r0, phi, opt.min_length);
        if (v > best) {
            best = v;
            best_phi = phi;
        }
    }
    const double span = M_PI / opt.phi_points;
    const double refined = golden_max(
        [&](double phi) {
            return best_average_at_phi(E0, r0, phi, opt.min_length);
        },
        std::max(0.0, best_phi - span), std::min(M_PI, best_phi + span),
        opt.golden_iters);
    best = std::max(best, best_average_at_phi(E0, r0, refined, opt.min_length));
    return best;
}

// ---------------------------------------------------------------------------
// sharpness configuration

Segment2D SharpnessConfig::segment() const {
    if (!(ell > 0.0) || !(ell < L) || !(foot_radius > 0.0))
        throw InvalidInput("SharpnessConfig: requires 0 < ell < L, foot_radius > 0");
    const double zy = L - 0.5 * ell; // |z - y|
    Segment2D seg;
    seg.r0 = std::hypot(foot_radius, zy);
    seg.phi = std::atan2(foot_radius, zy);
    seg.a = -L;
    seg.b = 0.0;
    return seg;
}

RadialIndicatorSet SharpnessConfig::annulus() const {
    const double w_r = std::hypot(foot_radius, 0.5 * ell); // |w|
    return RadialIndicatorSet::single(foot_radius, w_r);
}

double SharpnessConfig::ring_maximal_exact() const {
    const double half = 0.5 * ell;
    const double zy = L - half;
    return (half * half) / (zy * zy);
}

double SharpnessConfig::observed_constant_floor() const {
    return 2.0 * (L - 0.5 * ell) / L;
}

// ---------------------------------------------------------------------------
// restricted weak type for layered data

RestrictedWeakTypeResult restricted_weak_type_check(const SimpleRadialFunction& f, const RadialProfile& w,
                                double n, const RestrictedWeakTypeOptions& opt) {
    if (!(n >= 2.0)) throw InvalidInput("restricted_weak_type_check: n must be >= 2");
    const auto cc = condition_c_constants(w);
    const double upper = a1_upper_from_condc(cc, n);
    if (!std::isfinite(upper))
        throw Error("restricted_weak_type_check: weight has no finite A1 certificate");

    RestrictedWeakTypeResult res;
    res.a1_upper = upper;
    if (f.empty()) {
        res.lhs = 0.0;
        res.rhs = 0.0;
        res.pass = true;
        return res;
    }

    // radius window around the support
    double lo_scale = kInf, hi_scale = 0.0;
    for (double bp : f.breakpoints()) {
        if (bp > 0.0) lo_scale = std::min(lo_scale, bp);
        hi_scale = std::max(hi_scale, bp);
    }
    if (!(hi_scale > 0.0))
        throw InvalidInput("restricted_weak_type_check: degenerate support");
    if (std::isinf(lo_scale)) lo_scale = hi_scale;
    const auto grid = geometric_grid(opt.radius_lo_factor * lo_scale,
                                     opt.radius_hi_factor * hi_scale,
                                     std::max(1, static_cast<int>(std::ceil(
                                         opt.radius_points /
                                         std::log10((opt.radius_hi_factor * hi_scale) /
                                                    (opt.radius_lo_factor * lo_scale))))));

    // superposed upper bound sum_j c_j K(chi_{E_j}) tabulated on the grid
    std::vector<double> g(grid.size() - 1, 0.0);
    parallel_for(g.size(), opt.threads, [&](size_t i) {
        double v = 0.0;
        for (const auto& layer : f.layers())
            v += layer.coefficient *
                 universal_maximal_radial(layer.set, grid[i], opt.universal);
        g[i] = v;
    });
    const RadialProfile tab = RadialProfile::tabulated(grid, g);

    res.lhs = lorentz_weak_norm(tab, w, n, n);
    res.rhs = (2.0 * n / (n - 1.0)) * std::pow(2.0 * upper, 1.0 / n) *
              lorentz_n1_norm(f, w, n);
    res.pass = res.lhs <= res.rhs * (1.0 + 1e-9);
    return res;
}

} // namespace radmax
