#pragma once

#include "radmax/maximal.hpp"
#include "radmax/profile.hpp"
#include "radmax/radial_sets.hpp"

#include <vector>

namespace radmax {

// A segment through the evaluation point x = (r0, 0) in the plane:
// { x + s u : s in [a, b] }, u = (cos phi, sin phi), with a <= 0 <= b so the
// point lies on the segment. All of the ambient geometry reduces to this
// plane: radial sets meet the segment in circles around the origin.
struct Segment2D {
    double r0 = 0.0;  // |x|
    double phi = 0.0; // in [0, pi]
    double a = 0.0;   // <= 0
    double b = 0.0;   // >= 0, b - a > 0

    double length() const { return b - a; }
    // offset of the point closest to the origin (foot of the perpendicular)
    double foot_offset() const;
    double min_radius() const;      // distance from the origin to the segment
    double radius_at(double s) const;

    void validate() const;
};

// exact 1-D measure of { s in [a,b] : radius(s) in E0 }; quadratic-root
// interval arithmetic, no quadrature.
double segment_radius_intersection(const Segment2D& seg, const RadialIndicatorSet& E0);

struct SegmentBoundResult {
    double lhs;   // segment average of the indicator
    double rhs;   // 2 * (uncentered maximal of chi_E0 at r0)^{1/k}
    double ratio; // lhs / rhs
    bool pass;    // lhs <= rhs (1 + tol)
};

// The segment-vs-rings bound: segment average <= 2 (M~_{v_k} chi_{E0}(r0))^{1/k}.
SegmentBoundResult segment_ring_bound(const Segment2D& seg,
                                       const RadialIndicatorSet& E0, double k,
                                       double rel_tol = 1e-9);

struct UniversalOptions {
    int phi_points = 256;
    int golden_iters = 40;
    double min_length = 1e-12; // ignore shorter segments
};

// sup over (phi, a, b) of the segment average of chi_{E0} at |x| = r0. Every
// probe is exact, so the result is a certified lower bound for the sup.
double universal_maximal_radial(const RadialIndicatorSet& E0, double r0,
                                const UniversalOptions& opt = {});

// Extremal geometry for the sharpness of the constant 2: a segment of length
// L whose annulus cut has length ell, evaluated at the far endpoint.
struct SharpnessConfig {
    double L;                 // segment length
    double ell;               // 0 < ell < L
    double foot_radius = 1.0; // distance of the line to the origin

    Segment2D segment() const;
    RadialIndicatorSet annulus() const;
    // exact value of the ring maximal operator at |z| in dimension 2
    double ring_maximal_exact() const;
    // the implied lower bound for the constant: 2 (L - ell/2) / L
    double observed_constant_floor() const;
};

struct RestrictedWeakTypeOptions {
    int radius_points = 128;
    double radius_lo_factor = 0.25; // window = [lo_factor * min scale, hi_factor * max]
    double radius_hi_factor = 16.0;
    UniversalOptions universal;
    unsigned threads = 1;
};

struct RestrictedWeakTypeResult {
    double lhs;  // weak Lorentz functional of the superposed segment bound
    double rhs;  // (2n/(n-1)) (2 upper)^{1/n} * L^{n,1} norm of f
    double a1_upper;
    bool pass;
};

// Restricted weak-type inequality for the universal operator on layered
// radial data, checked against the certified A1 upper bound of w.
RestrictedWeakTypeResult restricted_weak_type_check(const SimpleRadialFunction& f, const RadialProfile& w,
                                double n, const RestrictedWeakTypeOptions& opt = {});

} // namespace radmax
