// SPDX-License-Identifier: Apache-2.0
#include "onesided/weighted_space.hpp"

#include <cmath>
#include <sstream>

#include "onesided/errors.hpp"

namespace onesided {

WeightedSpace::WeightedSpace(double p, RealFn weight, QuadConfig quad, std::string weight_id)
    : p_(p), weight_(std::move(weight)), quad_(quad), weight_id_(std::move(weight_id)) {
    if (!(p_ >= 1.0) || !std::isfinite(p_))
        throw ConfigError("exponent p must satisfy 1 <= p < inf");
    if (!weight_) throw ConfigError("weighted space needs a weight function");
    validate(quad_);
}

WeightedSpace WeightedSpace::unweighted(double p, QuadConfig quad) {
    WeightedSpace space(p, [](double) { return 1.0; }, quad, "one");
    space.unweighted_ = true;
    return space;
}

WeightedSpace WeightedSpace::with_p(double p) const {
    WeightedSpace copy = *this;
    if (!(p >= 1.0) || !std::isfinite(p)) throw ConfigError("exponent p must satisfy 1 <= p < inf");
    copy.p_ = p;
    return copy;
}

double weighted_norm(const RealFn& f, const WeightedSpace& space, Interval domain,
                     QuadHints hints) {
    const QuadGrid grid = quad_grid(domain.lo, domain.hi, space.quad(), hints);
    const double p = space.p();
    double total = 0.0;
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
        const double x = grid.x[i];
        const double beta = space.weight(x);
        if (!(beta > 0.0) || !std::isfinite(beta)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "weight must be positive and finite; got " << beta << " at x=" << x;
            throw ConfigError(msg.str());
        }
        const double ratio = std::abs(f(x) / beta);
        if (!std::isfinite(ratio)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "non-finite f/beta at node x=" << x;
            throw EvaluationError(msg.str());
        }
        total += grid.w[i] * (p == 1.0 ? ratio : std::pow(ratio, p));
    }
    return p == 1.0 ? total : std::pow(total, 1.0 / p);
}

double weighted_norm(const RealFn& f, const WeightedSpace& space) {
    return weighted_norm(f, space, Interval{0.0, 1.0});
}

double weighted_norm(const FunctionModel& f, const WeightedSpace& space) {
    return weighted_norm([&f](double x) { return f(x); }, space, Interval{0.0, 1.0},
                         f.quad_hints());
}

double domination_ratio(const FunctionModel& f, const WeightedSpace& space) {
    const auto bound = f.domination();
    if (!bound) throw ArgumentError("function '" + f.id() + "' declares no domination constant");
    const QuadGrid grid = quad_grid(0.0, 1.0, space.quad());
    double worst = 0.0;
    for (double x : grid.x) worst = std::max(worst, std::abs(f(x)) / (*bound * space.weight(x)));
    return worst;
}

}  // namespace onesided
