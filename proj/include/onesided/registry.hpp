// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onesided/function_model.hpp"
#include "onesided/weighted_space.hpp"

namespace onesided {

/// Built-in targets:
///   constant     1
///   identity     x
///   neg_identity -x
///   square       x^2
///   abs_shift    |x - 0.3|            (kink at 0.3)
///   sin10        sin(10 x)
///   exp          e^x
///   ramp         (1 + tanh(20 (x - 1/2))) / 2
///   inv_quarter  x^(-1/4)             (pole at 0, |rho| <= 1 * x^(-1/2))
/// Throws UnknownIdError for anything else.
[[nodiscard]] FunctionModel builtin_function(std::string_view id);
[[nodiscard]] std::vector<std::string> builtin_function_ids();

/// Built-in weights: "one" (beta = 1) and "inv_sqrt" (beta = x^(-1/2)).
[[nodiscard]] RealFn builtin_weight(std::string_view id);
[[nodiscard]] std::vector<std::string> builtin_weight_ids();

/// Space over a built-in weight; "one" yields the unweighted space.
[[nodiscard]] WeightedSpace builtin_space(std::string_view weight_id, double p, QuadConfig quad = {});

struct SuiteMember {
    FunctionModel rho;
    std::string weight_id;
};

/// constant, identity, abs_shift, sin10, exp (unit weight) and inv_quarter
/// paired with the inv_sqrt weight, in that order.
[[nodiscard]] std::vector<SuiteMember> default_suite();

}  // namespace onesided
