// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace onesided {

// Error taxonomy shared by every module. The C API maps each type onto a
// distinct status code, so keep the two lists in sync.

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unknown built-in function or weight id.
struct UnknownIdError : ArgumentError {
    using ArgumentError::ArgumentError;
};

/// Malformed arithmetic expression.
struct ParseError : ArgumentError {
    using ArgumentError::ArgumentError;
};

/// A callable produced a non-finite value at a sample point.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad space or solver configuration (zero weight, p < 1, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace onesided
