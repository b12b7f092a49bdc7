// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "onesided/quadrature.hpp"

namespace onesided {

struct SingularEndpoints {
    bool left = false;
    bool right = false;
};

/// Black-box target on X = [0, 1], possibly unbounded at flagged endpoints.
///
/// Requests at (or beyond) a flagged endpoint are clamped to the point at
/// distance `singular_offset` inside X, so the model never returns inf/NaN
/// for a pole it knows about. Breakpoints mark kinks or jumps of the
/// derivative; integrators split panels there.
class FunctionModel {
public:
    static constexpr double kDefaultSingularOffset = 1e-9;
    static constexpr double kDerivativeStep = 1e-6;

    FunctionModel() = default;
    explicit FunctionModel(RealFn eval, std::string id = "anonymous");

    FunctionModel& with_derivative(RealFn deriv);
    FunctionModel& with_singular(bool left, bool right,
                                 double offset = kDefaultSingularOffset);
    FunctionModel& with_domination(double bound);
    FunctionModel& with_breakpoints(std::vector<double> points);
    /// Points where the model has an integrable singularity of its value or
    /// derivative (interior or not); integrators grade panels towards them.
    FunctionModel& with_singular_points(std::vector<double> points);

    [[nodiscard]] double operator()(double x) const;

    /// Analytic derivative when supplied, otherwise a central difference with
    /// step 1e-6 (one-sided within one step of an end of X). Throws
    /// EvaluationError when the quotient is not finite.
    [[nodiscard]] double derivative(double x) const;

    [[nodiscard]] bool has_derivative() const { return static_cast<bool>(deriv_); }
    [[nodiscard]] const std::string& id() const { return id_; }
    [[nodiscard]] SingularEndpoints singular() const { return singular_; }
    [[nodiscard]] bool has_singular_endpoint() const { return singular_.left || singular_.right; }
    [[nodiscard]] double singular_offset() const { return offset_; }
    [[nodiscard]] std::optional<double> domination() const { return domination_; }
    [[nodiscard]] const std::vector<double>& breakpoints() const { return breakpoints_; }
    /// Declared singular points plus the flagged endpoints, ascending.
    [[nodiscard]] const std::vector<double>& singular_points() const { return singular_points_; }
    [[nodiscard]] QuadHints quad_hints() const { return {breakpoints_, singular_points_}; }

    /// Point actually sampled for a request at x (after endpoint clamping).
    [[nodiscard]] double clamp(double x) const;

    /// True when x coincides with a flagged singular endpoint.
    [[nodiscard]] bool at_singularity(double x) const;

private:
    RealFn eval_;
    RealFn deriv_;
    std::string id_ = "anonymous";
    SingularEndpoints singular_{};
    double offset_ = kDefaultSingularOffset;
    std::optional<double> domination_;
    std::vector<double> breakpoints_;
    std::vector<double> declared_singular_;
    std::vector<double> singular_points_;

    void refresh_singular_points();
};

}  // namespace onesided
