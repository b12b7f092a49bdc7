// SPDX-License-Identifier: Apache-2.0
#include "onesided/function_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "onesided/errors.hpp"

namespace onesided {

FunctionModel::FunctionModel(RealFn eval, std::string id) : eval_(std::move(eval)), id_(std::move(id)) {
    if (!eval_) throw ArgumentError("function model needs an evaluator");
}

FunctionModel& FunctionModel::with_derivative(RealFn deriv) {
    deriv_ = std::move(deriv);
    return *this;
}

FunctionModel& FunctionModel::with_singular(bool left, bool right, double offset) {
    if (!(offset > 0.0 && offset < 0.5)) throw ArgumentError("singular offset must lie in (0, 0.5)");
    singular_ = {left, right};
    offset_ = offset;
    refresh_singular_points();
    return *this;
}

FunctionModel& FunctionModel::with_domination(double bound) {
    if (!(bound > 0.0) || !std::isfinite(bound))
        throw ArgumentError("domination constant must be positive and finite");
    domination_ = bound;
    return *this;
}

FunctionModel& FunctionModel::with_breakpoints(std::vector<double> points) {
    std::sort(points.begin(), points.end());
    breakpoints_ = std::move(points);
    return *this;
}

FunctionModel& FunctionModel::with_singular_points(std::vector<double> points) {
    declared_singular_ = std::move(points);
    refresh_singular_points();
    return *this;
}

void FunctionModel::refresh_singular_points() {
    singular_points_ = declared_singular_;
    if (singular_.left) singular_points_.push_back(0.0);
    if (singular_.right) singular_points_.push_back(1.0);
    std::sort(singular_points_.begin(), singular_points_.end());
    singular_points_.erase(std::unique(singular_points_.begin(), singular_points_.end()),
                           singular_points_.end());
}

double FunctionModel::clamp(double x) const {
    if (singular_.left && x < offset_) return offset_;
    if (singular_.right && x > 1.0 - offset_) return 1.0 - offset_;
    return x;
}

bool FunctionModel::at_singularity(double x) const {
    return (singular_.left && x <= 0.0) || (singular_.right && x >= 1.0);
}

double FunctionModel::operator()(double x) const { return eval_(clamp(x)); }

double FunctionModel::derivative(double x) const {
    const double at = clamp(x);
    if (deriv_) return deriv_(at);
    const double h = kDerivativeStep;
    const double lo = std::max(0.0, at - h);
    const double hi = std::min(1.0, at + h);
    const double d = ((*this)(hi) - (*this)(lo)) / (hi - lo);
    if (!std::isfinite(d)) {
        std::ostringstream msg;
        msg << "non-finite difference quotient for '" << id_ << "' at x=" << x;
        throw EvaluationError(msg.str());
    }
    return d;
}

}  // namespace onesided
