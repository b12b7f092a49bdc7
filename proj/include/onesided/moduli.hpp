// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "onesided/function_model.hpp"
#include "onesided/weighted_space.hpp"

namespace onesided {

/// Discretization of the local modulus of order k.
///
/// The window [x - k*delta/2, x + k*delta/2] clipped to X is sampled on a
/// uniform lattice of k*(window_samples - 1) intervals. Steps h are lattice
/// multiples s = 1..window_samples-1 (thinned to step_samples - 1 distinct
/// values when step_samples < window_samples), anchors are every lattice
/// point with t + k*h still inside the window. The largest step spans the
/// whole window, so for k = 1 the sup is max - min over the lattice.
struct ModulusConfig {
    int k = 1;
    int window_samples = 33;
    int step_samples = 33;
};

void validate(const ModulusConfig& cfg);

/// sum_{r=0}^{k} (-1)^{k-r} C(k, r) rho(x + r h). Every sample point must
/// lie in X (DomainError otherwise).
[[nodiscard]] double finite_difference(const FunctionModel& rho, double x, double h, int k);

/// Discretized sup of |finite_difference(rho, t, h, k)| over anchors and
/// steps with t, t + k h in the clipped window. Requires delta > 0.
[[nodiscard]] double local_modulus(const FunctionModel& rho, double x, double delta,
                                   const ModulusConfig& cfg);

/// tau_k(rho, delta): weighted norm of x -> local_modulus(rho, x, delta).
[[nodiscard]] double averaged_modulus(const FunctionModel& rho, double delta,
                                      const ModulusConfig& cfg, const WeightedSpace& space);

}  // namespace onesided
