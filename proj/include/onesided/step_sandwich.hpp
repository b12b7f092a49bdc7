// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "onesided/polynomial.hpp"
#include "onesided/weighted_space.hpp"

namespace onesided {

/// Which step function a pair encloses on [-1, 1].
///   standard:  Phi(u)  = 0 for u <= 0, 1 for u > 0
///   reflected: Phi*(u) = 1 - Phi(u) = 1 for u <= 0, 0 for u > 0
enum class Orientation { standard, reflected };

struct SandwichPair {
    Polynomial lower;
    Polynomial upper;
    int degree = 0;
    Orientation orientation = Orientation::standard;
    /// quad_integrate(upper - lower) over [-1, 1].
    double gap = 0.0;
    /// Number of nodes in the certification grid (0 for exact constant pairs).
    int margin_grid = 0;
};

[[nodiscard]] double step(double x);
[[nodiscard]] double reflected_step(double x);

/// Value of the enclosed target at u for the given orientation.
[[nodiscard]] double step_target(Orientation orientation, double u);

struct StepSandwichOptions {
    /// Constraint nodes of the LP; 0 selects max(20 k, 40).
    int cert_nodes = 0;
    /// Uniform slack enforced at every constraint node.
    double safety = 1e-6;
    /// Cutting-plane rounds adding the interior minimizers of the margin.
    int max_rounds = 20;
    /// Certification retries, each multiplying the safety by 10.
    int max_retries = 3;
};

/// Degree-k polynomials P <= Phi <= q on [-1, 1] minimising the integral of
/// q - P over an LP constraint grid (Chebyshev points on [-1, 0] and [0, 1]),
/// tightened by cutting planes and then certified on an independent uniform
/// grid of 10 * cert_nodes points. k = 0 returns the exact pair (0, 1).
/// Throws ArgumentError for k < 0 or cert_nodes < 20 k, InternalError when
/// the LP fails or certification keeps failing.
[[nodiscard]] SandwichPair build_step_sandwich(int k, int cert_nodes, double safety);
[[nodiscard]] SandwichPair build_step_sandwich(int k, const StepSandwichOptions& options = {});

/// Memoized build_step_sandwich(k) with default options (thread-safe).
[[nodiscard]] const SandwichPair& cached_step_sandwich(int k);

/// Memoized reflect_pair(cached_step_sandwich(k)).
[[nodiscard]] const SandwichPair& cached_reflected_sandwich(int k);

/// Weighted norm of upper - lower over [-1, 1]; p = 1 with a unit weight is
/// the L1 gap C_k.
[[nodiscard]] double sandwich_gap(const SandwichPair& pair, const WeightedSpace& space);

/// (1 - upper, 1 - lower): encloses Phi* instead of Phi. Throws ArgumentError
/// when the pair is already reflected.
[[nodiscard]] SandwichPair reflect_pair(const SandwichPair& pair);

struct Certificate {
    double lower_margin;   // min of target - lower
    double upper_margin;   // min of upper - target
    int nodes;
};

/// Margins on a uniform grid of `nodes` points on [-1, 1] (the jump point 0
/// is always included).
[[nodiscard]] Certificate certify(const SandwichPair& pair, int nodes);

}  // namespace onesided
