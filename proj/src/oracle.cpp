// SPDX-License-Identifier: Apache-2.0
#include "onesided/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "onesided/errors.hpp"
#include "onesided/simplex.hpp"

namespace onesided {

namespace {

constexpr Interval kUnit{0.0, 1.0};

struct Grid {
    std::vector<double> x;
    Eigen::MatrixXd T;
    Eigen::VectorXd rho;
    Eigen::VectorXd beta;
};

void require_setup(int k, const WeightedSpace& space, int grid_n) {
    if (space.p() != 1.0) {
        std::ostringstream msg;
        msg << "oracle supports p = 1 only (got p = " << space.p() << ")";
        throw UnsupportedError(msg.str());
    }
    if (k < 0) throw ArgumentError("degree k must be >= 0");
    if (grid_n < k + 1) throw ArgumentError("oracle grid needs at least k + 1 nodes");
}

Grid make_grid(const FunctionModel& rho, int k, const WeightedSpace& space, int grid_n) {
    Grid g;
    g.x = chebyshev_points(grid_n, kUnit);
    g.T.resize(grid_n, k + 1);
    g.rho.resize(grid_n);
    g.beta.resize(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        const double x = g.x[static_cast<std::size_t>(i)];
        const double s = 2.0 * x - 1.0;
        g.T(i, 0) = 1.0;
        if (k >= 1) g.T(i, 1) = s;
        for (int j = 2; j <= k; ++j) g.T(i, j) = 2.0 * s * g.T(i, j - 1) - g.T(i, j - 2);
        const double v = rho(x);
        const double b = space.weight(x);
        std::ostringstream msg;
        msg.precision(17);
        if (!std::isfinite(v)) {
            msg << "non-finite value of '" << rho.id() << "' at oracle node x=" << x;
            throw EvaluationError(msg.str());
        }
        if (!(b > 0.0) || !std::isfinite(b)) {
            msg << "weight must be positive and finite; got " << b << " at x=" << x;
            throw ConfigError(msg.str());
        }
        g.rho[i] = v;
        g.beta[i] = b;
    }
    return g;
}

// int_0^1 T_j(2x - 1) / beta(x) dx, with panels graded towards both ends in
// case the weight is singular there.
Eigen::VectorXd moments(int k, const WeightedSpace& space) {
    static const std::vector<double> ends{0.0, 1.0};
    const QuadGrid grid = quad_grid(0.0, 1.0, space.quad(), QuadHints{{}, ends});
    Eigen::VectorXd m = Eigen::VectorXd::Zero(k + 1);
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
        const double s = 2.0 * grid.x[i] - 1.0;
        const double scale = grid.w[i] / space.weight(grid.x[i]);
        double prev = 1.0;
        double cur = s;
        m[0] += scale;
        if (k >= 1) m[1] += scale * s;
        for (int j = 2; j <= k; ++j) {
            const double next = 2.0 * s * cur - prev;
            prev = cur;
            cur = next;
            m[j] += scale * cur;
        }
    }
    return m;
}

Polynomial to_poly(const Eigen::VectorXd& a) {
    return Polynomial(std::vector<double>(a.data(), a.data() + a.size()), kUnit);
}

void require_optimal(const lp::FreeSolution& sol, const char* what) {
    if (sol.status == lp::Status::optimal) return;
    std::ostringstream msg;
    msg << what << " LP did not reach optimality (status " << static_cast<int>(sol.status) << ")";
    throw InternalError(msg.str());
}

}  // namespace

std::vector<double> fejer_weights(int n) {
    if (n < 1) throw ArgumentError("Fejer rule needs at least one node");
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // chebyshev_points lists nodes in ascending order: theta decreasing.
        const double theta = std::numbers::pi * (n - i - 0.5) / n;
        double sum = 0.0;
        for (int j = 1; j <= n / 2; ++j) sum += std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
        // Factor 1/2 maps [-1, 1] onto [0, 1].
        w[static_cast<std::size_t>(i)] = (1.0 - 2.0 * sum) / n;
    }
    return w;
}

OracleResult best_onesided(const FunctionModel& rho, int k, const WeightedSpace& space, int grid_n) {
    require_setup(k, space, grid_n);
    const Grid g = make_grid(rho, k, space, grid_n);
    const Eigen::VectorXd m = moments(k, space);

    const lp::FreeSolution up = lp::minimize_over_halfspaces(g.T, g.rho, m);
    require_optimal(up, "one-sided upper");
    const lp::FreeSolution lo = lp::minimize_over_halfspaces(-g.T, -g.rho, -m);
    require_optimal(lo, "one-sided lower");

    OracleResult out{to_poly(lo.a), to_poly(up.a), m.dot(up.a - lo.a), grid_n, 1.0};
    return out;
}

OracleResult best_twosided(const FunctionModel& rho, int k, const WeightedSpace& space, int grid_n) {
    require_setup(k, space, grid_n);
    const Grid g = make_grid(rho, k, space, grid_n);
    const std::vector<double> fejer = fejer_weights(grid_n);
    Eigen::VectorXd w(grid_n);
    for (int i = 0; i < grid_n; ++i) w[i] = fejer[static_cast<std::size_t>(i)] / g.beta[i];

    const lp::FreeSolution fit = lp::weighted_l1_fit(g.T, g.rho, w);
    require_optimal(fit, "two-sided");
    return OracleResult{to_poly(fit.a), std::nullopt, fit.objective, grid_n, 1.0};
}

}  // namespace onesided
