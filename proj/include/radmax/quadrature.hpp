#pragma once

#include "radmax/log_scalar.hpp"

#include <functional>
#include <span>

namespace radmax {

struct LogQuadOptions {
    double rel_tol = 1e-10;
    int max_panels = 8192;
    // When false, budget exhaustion returns the best estimate instead of
    // throwing QuadratureFailure.
    bool throw_on_failure = true;
};

struct LogQuadResult {
    LogScalar value;
    double rel_error = 0.0; // estimated, relative
    int panels = 0;
    bool converged = true;
};

// Adaptive G7/K15 quadrature of a nonnegative integrand given in log scale:
// log_f(t) = log f(t), -inf where f vanishes. Panel sums are evaluated
// shifted by the panel's node maximum, so integrands like t^{n-1} at
// n = 1e6 never leave double range. `splits` are interior points (integrand
// kinks/breaks) that seed the initial panel set.
LogQuadResult log_quadrature(const std::function<double(double)>& log_f,
                             double a, double b,
                             std::span<const double> splits = {},
                             const LogQuadOptions& opt = {});

} // namespace radmax
