// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "onesided/function_model.hpp"

namespace onesided {

/// Compiles an arithmetic expression in the variable x.
///
///   operators   + - * / ^ (right-associative), unary minus, parentheses
///   functions   sin cos tan exp log sqrt abs pow(a, b)
///   constants   pi e, decimal literals with optional exponent
///
/// Throws ParseError with the offending column on malformed input. The
/// result is side-effect free and safe to call concurrently.
[[nodiscard]] RealFn compile_expression(std::string_view text);

/// FunctionModel wrapper with id "expr:<text>" (derivative by central
/// differences).
[[nodiscard]] FunctionModel expression_function(std::string_view text);

}  // namespace onesided
