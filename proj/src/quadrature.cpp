#include "radmax/quadrature.hpp"
#include "radmax/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace radmax {

namespace {

// Gauss 7 / Kronrod 15 nodes on [0,1] (abscissa, gauss weight, kronrod weight);
// nonzero gauss weight marks the shared nodes.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Running-total subtraction for the refinement heuristic: accumulated
// rounding may leave the total a hair below a dominant member, so clamp to
// zero instead of treating that as a domain error. Final sums are rebuilt
// from scratch and never go through this.
LogScalar sub_clamped(LogScalar total, LogScalar member) {
    if (member.is_zero()) return total;
    if (total.log() <= member.log()) return LogScalar::zero();
    return total.sub(member);
}

struct Panel {
    double a, b;
    double log_value;  // log of the K15 estimate of the panel integral
    double log_error;  // log of |K15 - G7|
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        return x.log_error < y.log_error; // max-heap on error
    }
};

Panel evaluate_panel(const std::function<double(double)>& log_f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double logs[15];
    double xs[15];
    int m = 0;
    for (const auto& nd : kNodes) {
        xs[m++] = mid + half * nd[0];
        if (nd[0] != 0.0) xs[m++] = mid - half * nd[0];
    }
    double peak = kNegInf;
    for (int i = 0; i < 15; ++i) {
        logs[i] = log_f(xs[i]);
        if (std::isnan(logs[i])) throw QuadratureFailure("integrand returned NaN");
        if (std::isinf(logs[i]) && logs[i] > 0.0)
            throw QuadratureFailure("integrand returned +inf at an interior node");
        peak = std::max(peak, logs[i]);
    }

    Panel p{a, b, kNegInf, kNegInf};
    if (std::isinf(peak) && peak < 0.0) return p; // panel identically zero

    double g7 = 0.0, k15 = 0.0;
    int idx = 0;
    for (const auto& nd : kNodes) {
        double s = std::exp(logs[idx++] - peak);
        if (nd[0] != 0.0) s += std::exp(logs[idx++] - peak);
        g7 += nd[1] * s;
        k15 += nd[2] * s;
    }
    const double scale = peak + std::log(half);
    p.log_value = scale + std::log(k15);
    const double diff = std::fabs(k15 - g7);
    p.log_error = diff > 0.0 ? scale + std::log(diff) : p.log_value + std::log(1e-16);
    return p;
}

} // namespace

LogQuadResult log_quadrature(const std::function<double(double)>& log_f,
                             double a, double b,
                             std::span<const double> splits,
                             const LogQuadOptions& opt) {
    LogQuadResult out;
    if (!(b > a)) return out; // empty or degenerate interval: zero

    std::vector<double> edges;
    edges.push_back(a);
    for (double s : splits)
        if (s > a && s < b) edges.push_back(s);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    LogScalar total_value = LogScalar::zero();
    LogScalar total_error = LogScalar::zero();
    int panels = 0;

    auto push = [&](const Panel& p) {
        total_value += LogScalar::from_log(p.log_value);
        total_error += LogScalar::from_log(p.log_error);
        heap.push(p);
    };

    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        push(evaluate_panel(log_f, edges[i], edges[i + 1]));
        ++panels;
    }

    const double log_tol = std::log(opt.rel_tol);
    while (!total_value.is_zero() && !heap.empty()) {
        if (total_error.is_zero() ||
            total_error.log() - total_value.log() <= log_tol)
            break;
        if (panels >= opt.max_panels) {
            out.converged = false;
            break;
        }
        Panel worst = heap.top();
        if (worst.log_error == kNegInf) break; // nothing left worth refining
        heap.pop();
        total_error = sub_clamped(total_error, LogScalar::from_log(worst.log_error));
        total_value = sub_clamped(total_value, LogScalar::from_log(worst.log_value));

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // At double resolution; accept this panel as exact.
            worst.log_error = kNegInf;
            push(worst);
            continue;
        }
        push(evaluate_panel(log_f, worst.a, mid));
        push(evaluate_panel(log_f, mid, worst.b));
        ++panels;
    }

    // Recompute the final sums exactly from the surviving panels so the
    // reported value carries no incremental-update drift.
    LogScalar value = LogScalar::zero();
    LogScalar error = LogScalar::zero();
    while (!heap.empty()) {
        value += LogScalar::from_log(heap.top().log_value);
        error += LogScalar::from_log(heap.top().log_error);
        heap.pop();
    }
    out.value = value;
    out.panels = panels;
    out.rel_error = value.is_zero() ? 0.0 : std::exp(error.log() - value.log());
    if (!out.converged && opt.throw_on_failure)
        throw QuadratureFailure("log_quadrature: panel budget exhausted (rel err ~ " +
                                std::to_string(out.rel_error) + ")");
    return out;
}

} // namespace radmax
