// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace onesided {

using RealFn = std::function<double(double)>;

/// Composite Gauss-Legendre configuration. Nodes are strictly interior to
/// every panel, so integrands are never sampled at the interval endpoints.
struct QuadConfig {
    int panels = 64;
    int nodes = 16;
    /// Distance from a flagged singular endpoint at which evaluation is clamped.
    double singular_offset = 1e-9;
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached; thread-safe). Exact to degree 2n-1.
const GaussRule& gauss_legendre(int n);

/// Points where the integrand is not smooth.
///   breakpoints: kinks or jumps; panels are split there.
///   singular:    integrable singularities (possibly just outside the
///                interval); panels touching or near them are graded
///                geometrically towards the singular point.
struct QuadHints {
    std::span<const double> breakpoints;
    std::span<const double> singular;
};

/// Flattened composite rule: integral ~ sum_i w[i] * f(x[i]).
struct QuadGrid {
    std::vector<double> x;
    std::vector<double> w;
};

/// Uniform panels on [a, b], split at every hint point strictly inside a
/// panel. A panel within one panel width of a singular point is replaced by
/// geometrically shrinking sub-panels (ratio 0.15, 14 levels) towards it.
[[nodiscard]] QuadGrid quad_grid(double a, double b, const QuadConfig& cfg, QuadHints hints = {});

/// Throws EvaluationError naming the node if f is non-finite there.
[[nodiscard]] double quad_integrate(const RealFn& f, double a, double b, const QuadConfig& cfg,
                                    QuadHints hints = {});

/// Sums w[i] * values[i] in node order.
[[nodiscard]] double quad_sum(const QuadGrid& grid, std::span<const double> values);

void validate(const QuadConfig& cfg);

}  // namespace onesided
