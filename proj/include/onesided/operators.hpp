// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "onesided/function_model.hpp"
#include "onesided/moduli.hpp"
#include "onesided/polynomial.hpp"
#include "onesided/step_sandwich.hpp"

namespace onesided {

enum class Side { lower, upper };

struct SplitDerivative {
    RealFn plus;   // max(rho', 0)
    RealFn minus;  // max(-rho', 0)
};

/// Positive and negative parts of rho' (analytic derivative when the model
/// has one, central differences otherwise).
[[nodiscard]] SplitDerivative split_derivative(const FunctionModel& rho);

struct OperatorConfig {
    /// Integrals over t in [0, 1] in the kernel operators.
    QuadConfig outer{};
    /// Averages over an interval of length y inside the smoothers.
    QuadConfig inner{8, 16};
    /// Sampling of the first-order local modulus used by the smoothers
    /// (its order field is ignored).
    ModulusConfig modulus{};
};

struct OperatorParams {
    int k = 0;
    double y = 0.0;
    std::string pair_id;
};

struct OperatorOutput {
    Polynomial poly;
    Side kind;
    OperatorParams params;
    std::string provenance;
};

/// Kernel operators on X = [0, 1] driven by a reflected step sandwich
/// (P*, q*) around Phi*(u) = 1 for u <= 0:
///
///   M(rho, x) = rho(0) + int_0^1 P*(t - x) rho'_+(t) dt - int_0^1 q*(t - x) rho'_-(t) dt
///   N(rho, x) = rho(0) + int_0^1 q*(t - x) rho'_+(t) dt - int_0^1 P*(t - x) rho'_-(t) dt
///
/// Since the integral of Phi*(t - x) rho'(t) over [0, 1] is rho(x) - rho(0),
/// M <= rho <= N pointwise. Both throw ArgumentError for a standard pair.
[[nodiscard]] double lower_op_M(const FunctionModel& rho, const SandwichPair& pair, double x,
                                const QuadConfig& quad = {});
[[nodiscard]] double upper_op_N(const FunctionModel& rho, const SandwichPair& pair, double x,
                                const QuadConfig& quad = {});

/// M / N as explicit polynomials of the pair's degree on [0, 1]. The
/// operator is linear in the kernel, so its value is a degree-k polynomial in
/// x for every quadrature node; interpolation at k+1 Chebyshev points
/// recovers it exactly up to rounding.
[[nodiscard]] OperatorOutput materialize_M(const FunctionModel& rho, const SandwichPair& pair,
                                           const QuadConfig& quad = {});
[[nodiscard]] OperatorOutput materialize_N(const FunctionModel& rho, const SandwichPair& pair,
                                           const QuadConfig& quad = {});

/// Steklov-type smoother shifted by the first-order local modulus:
///
///   G_y(rho, x) = (1/y) int_a^{a+y} [rho(u) - omega_1(rho, u, y)] du,  a = (1-y) x
///
/// and H_y with +omega. Its derivative follows from the Leibniz rule,
/// (1-y)/y * (g(a+y) - g(a)), so the smoothed function is absolutely
/// continuous even when rho is not.
class Smoother {
public:
    Smoother(FunctionModel rho, double y, Side side, ModulusConfig modulus = {},
             QuadConfig inner = {8, 16});

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] double derivative(double x) const;
    /// rho(u) -/+ omega_1(rho, u, y).
    [[nodiscard]] double integrand(double u) const;

    [[nodiscard]] Side side() const { return side_; }
    [[nodiscard]] double y() const { return y_; }
    [[nodiscard]] const FunctionModel& target() const { return rho_; }

    /// Model of the smoothed function (value + analytic derivative).
    [[nodiscard]] FunctionModel as_function() const;

private:
    FunctionModel rho_;
    double y_;
    Side side_;
    ModulusConfig modulus_;
    QuadConfig inner_;
    // Kinks and singularities of the integrand in u, and of G / G' in x.
    std::vector<double> u_breaks_, u_singular_;
    std::vector<double> x_breaks_, x_singular_;
};

[[nodiscard]] Smoother smooth_lower_G(const FunctionModel& rho, double y,
                                      const OperatorConfig& cfg = {});
[[nodiscard]] Smoother smooth_upper_H(const FunctionModel& rho, double y,
                                      const OperatorConfig& cfg = {});

/// L_{k,y} = M_k(G_y(rho)) and J_{k,y} = N_k(H_y(rho)) with the cached
/// reflected step sandwich of degree k. Requires y in (0, 1), k >= 0.
[[nodiscard]] OperatorOutput composite_lower_L(const FunctionModel& rho, int k, double y,
                                               const OperatorConfig& cfg = {});
[[nodiscard]] OperatorOutput composite_upper_J(const FunctionModel& rho, int k, double y,
                                               const OperatorConfig& cfg = {});

struct AutoPair {
    OperatorOutput lower;  // A_k
    OperatorOutput upper;  // B_k
};

/// (A_k, B_k) = (L_{k,1/k}, J_{k,1/k}); requires k >= 2.
[[nodiscard]] AutoPair auto_pair_AB(const FunctionModel& rho, int k, const OperatorConfig& cfg = {});

}  // namespace onesided
