// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "onesided/function_model.hpp"
#include "onesided/polynomial.hpp"
#include "onesided/quadrature.hpp"

namespace onesided {

/// L_{p,beta} on [0, 1]: ||f|| = (integral |f / beta|^p)^{1/p}, 1 <= p < inf.
class WeightedSpace {
public:
    WeightedSpace(double p, RealFn weight, QuadConfig quad = {}, std::string weight_id = "custom");

    static WeightedSpace unweighted(double p = 1.0, QuadConfig quad = {});

    [[nodiscard]] double p() const { return p_; }
    [[nodiscard]] double weight(double x) const { return weight_(x); }
    [[nodiscard]] const RealFn& weight_fn() const { return weight_; }
    [[nodiscard]] const QuadConfig& quad() const { return quad_; }
    [[nodiscard]] const std::string& weight_id() const { return weight_id_; }
    [[nodiscard]] bool is_unweighted() const { return unweighted_; }

    /// Same weight and quadrature with another exponent.
    [[nodiscard]] WeightedSpace with_p(double p) const;

private:
    double p_;
    RealFn weight_;
    QuadConfig quad_;
    std::string weight_id_;
    bool unweighted_ = false;
};

/// Weighted norm over [0, 1]. Throws ConfigError when beta is not positive
/// and finite at a node, EvaluationError when f/beta is not finite.
[[nodiscard]] double weighted_norm(const RealFn& f, const WeightedSpace& space);

/// As above, using the model's breakpoints and singular points as hints.
[[nodiscard]] double weighted_norm(const FunctionModel& f, const WeightedSpace& space);

/// Norm over an arbitrary interval (the weight is evaluated there as well).
[[nodiscard]] double weighted_norm(const RealFn& f, const WeightedSpace& space, Interval domain,
                                   QuadHints hints = {});

/// Largest |f| / (M beta) over the quadrature nodes; <= 1 means the
/// declared domination constant holds on the sample. Requires a declared M.
[[nodiscard]] double domination_ratio(const FunctionModel& f, const WeightedSpace& space);

}  // namespace onesided
