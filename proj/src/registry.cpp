// SPDX-License-Identifier: Apache-2.0
#include "onesided/registry.hpp"

#include <cmath>

#include "onesided/errors.hpp"

namespace onesided {

FunctionModel builtin_function(std::string_view id) {
    if (id == "constant") {
        return FunctionModel([](double) { return 1.0; }, "constant")
            .with_derivative([](double) { return 0.0; });
    }
    if (id == "identity") {
        return FunctionModel([](double x) { return x; }, "identity")
            .with_derivative([](double) { return 1.0; });
    }
    if (id == "neg_identity") {
        return FunctionModel([](double x) { return -x; }, "neg_identity")
            .with_derivative([](double) { return -1.0; });
    }
    if (id == "square") {
        return FunctionModel([](double x) { return x * x; }, "square")
            .with_derivative([](double x) { return 2.0 * x; });
    }
    if (id == "abs_shift") {
        return FunctionModel([](double x) { return std::abs(x - 0.3); }, "abs_shift")
            .with_derivative([](double x) { return x < 0.3 ? -1.0 : (x > 0.3 ? 1.0 : 0.0); })
            .with_breakpoints({0.3});
    }
    if (id == "sin10") {
        return FunctionModel([](double x) { return std::sin(10.0 * x); }, "sin10")
            .with_derivative([](double x) { return 10.0 * std::cos(10.0 * x); });
    }
    if (id == "exp") {
        return FunctionModel([](double x) { return std::exp(x); }, "exp")
            .with_derivative([](double x) { return std::exp(x); });
    }
    if (id == "ramp") {
        return FunctionModel([](double x) { return 0.5 * (1.0 + std::tanh(20.0 * (x - 0.5))); }, "ramp")
            .with_derivative([](double x) {
                const double c = std::cosh(20.0 * (x - 0.5));
                return 10.0 / (c * c);
            });
    }
    if (id == "inv_quarter") {
        return FunctionModel([](double x) { return std::pow(x, -0.25); }, "inv_quarter")
            .with_derivative([](double x) { return -0.25 * std::pow(x, -1.25); })
            .with_singular(true, false)
            .with_domination(1.0);
    }
    throw UnknownIdError("unknown function id '" + std::string(id) + "'");
}

std::vector<std::string> builtin_function_ids() {
    return {"constant", "identity", "neg_identity", "square", "abs_shift",
            "sin10",    "exp",      "ramp",         "inv_quarter"};
}

RealFn builtin_weight(std::string_view id) {
    if (id == "one") return [](double) { return 1.0; };
    if (id == "inv_sqrt") return [](double x) { return 1.0 / std::sqrt(x); };
    throw UnknownIdError("unknown weight id '" + std::string(id) + "'");
}

std::vector<std::string> builtin_weight_ids() { return {"one", "inv_sqrt"}; }

WeightedSpace builtin_space(std::string_view weight_id, double p, QuadConfig quad) {
    if (weight_id == "one") return WeightedSpace::unweighted(p, quad);
    return WeightedSpace(p, builtin_weight(weight_id), quad, std::string(weight_id));
}

std::vector<SuiteMember> default_suite() {
    return {{builtin_function("constant"), "one"},  {builtin_function("identity"), "one"},
            {builtin_function("abs_shift"), "one"}, {builtin_function("sin10"), "one"},
            {builtin_function("exp"), "one"},       {builtin_function("inv_quarter"), "inv_sqrt"}};
}

}  // namespace onesided
