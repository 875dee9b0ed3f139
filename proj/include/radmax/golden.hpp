#pragma once

#include <cmath>

namespace radmax {

// Golden-section refinement for a scalar maximum on [a, b]. The objective
// need not be unimodal globally; callers bracket with a coarse grid first
// and refine around the best cell. Returns the best abscissa probed;
// f may return -inf.
template <class F>
double golden_max(F&& f, double a, double b, int iters = 40) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? c : d;
}

} // namespace radmax
