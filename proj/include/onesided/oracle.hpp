// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "onesided/function_model.hpp"
#include "onesided/polynomial.hpp"
#include "onesided/weighted_space.hpp"

namespace onesided {

struct OracleResult {
    Polynomial lower;
    /// Present for the one-sided problem only.
    std::optional<Polynomial> upper;
    double value = 0.0;
    int grid_n = 0;
    double p = 1.0;
};

/// Grid-relaxed degree of best one-sided approximation:
///
///   min  int_0^1 (q - P) / beta   s.t.  P(x_i) <= rho(x_i) <= q(x_i)
///
/// over degree-k polynomials, at grid_n Chebyshev points of [0, 1]. The
/// objective uses exact basis moments int T_j(2x - 1) / beta, and the problem
/// splits into one LP per side. One-sidedness between nodes is not
/// certified, so the value is a lower bound for the continuous problem.
/// Throws UnsupportedError for p != 1.
[[nodiscard]] OracleResult best_onesided(const FunctionModel& rho, int k, const WeightedSpace& space,
                                         int grid_n = 512);

/// Discretized best L1 approximation, min sum_i w_i |rho(x_i) - P(x_i)| / beta(x_i)
/// on the same Chebyshev grid, where w_i are Fejer (first rule) weights.
/// Those weights integrate polynomials of degree < grid_n exactly, so with
/// beta = 1 the value never exceeds best_onesided's.
[[nodiscard]] OracleResult best_twosided(const FunctionModel& rho, int k, const WeightedSpace& space,
                                         int grid_n = 512);

/// Fejer first-rule weights for chebyshev_points(n, {0, 1}).
[[nodiscard]] std::vector<double> fejer_weights(int n);

}  // namespace onesided
