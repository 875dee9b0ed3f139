#pragma once

namespace radmax {

// In-repo log-gamma. Lanczos (g = 7, 9 terms) below the Stirling regime,
// Stirling series with Bernoulli correction terms above it.
double log_gamma(double x);

// log Gamma(x + delta) - log Gamma(x) for x >= 1, |delta| <= 1, computed
// without cancellation between two huge values (log1p/expm1 forms of the
// Stirling series). Needed for zero-slack log-domain comparisons of
// Gamma-ratio growth curves at x ~ 1e6.
double log_gamma_diff(double x, double delta);

// log B(a, b) = lgamma(a) + lgamma(b) - lgamma(a + b).
double log_beta(double a, double b);

} // namespace radmax
