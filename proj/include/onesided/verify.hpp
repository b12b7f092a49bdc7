// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "onesided/function_model.hpp"
#include "onesided/moduli.hpp"
#include "onesided/operators.hpp"
#include "onesided/registry.hpp"
#include "onesided/weighted_space.hpp"

namespace onesided {

enum class CheckKind {
    sandwich,   // lower <= rho <= upper on a grid
    bound,      // lhs <= constant * modulus * (1 + slack)
    dominance,  // lhs <= rhs + tol
};

struct CheckParams {
    int k = 0;
    double y = 0.0;
    double p = 1.0;
};

struct VerificationReport {
    std::string check_id;
    std::string function_id;
    std::string weight_id = "one";
    CheckKind kind = CheckKind::sandwich;
    CheckParams params;
    /// sandwich: min(rho - lower) and min(upper - rho).
    /// bound: the norm and constant * modulus.
    /// dominance: the two compared values.
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double min_margin = 0.0;
    bool pass = false;
    int grid_n = 0;
    /// Non-empty when an evaluation failed; such a report never passes.
    std::string error;
};

/// Samples lower, rho and upper at x_i = i / (grid_n - 1), skipping points
/// where rho sits on a flagged singular endpoint. Passes iff both minimum
/// margins are >= -tol. Evaluation failures yield a failed report carrying
/// the message.
[[nodiscard]] VerificationReport check_sandwich(const RealFn& lower, const FunctionModel& rho,
                                                const RealFn& upper, int grid_n = 1001,
                                                double tol = 1e-8);

/// ratio = lhs / (constant * modulus); passes iff ratio <= 1 + slack. With a
/// zero modulus the bound degenerates to lhs <= 1e-10.
[[nodiscard]] VerificationReport check_bound(double lhs_norm, double constant, double modulus,
                                             double slack = 0.05);

/// Passes iff lhs <= rhs + tol.
[[nodiscard]] VerificationReport check_dominance(double lhs, double rhs, double tol = 1e-8);

struct SuiteOptions {
    int sandwich_grid = 1001;
    double sandwich_tol = 1e-8;
    /// Relative slack for bounds in terms of tau (the lattice sup underestimates it).
    double tau_slack = 0.05;
    /// Relative slack for bounds whose right-hand side involves no tau.
    double exact_slack = 1e-6;
    double dominance_tol = 1e-8;
    int oracle_grid = 512;
    OperatorConfig operators{};
    ModulusConfig modulus{};
};

/// Full cross-product of checks over functions and degrees (y = 1/k), in
/// the order (check_id, function_id, k). Failures, including thrown errors,
/// are recorded and the suite continues. The oracle checks always use the
/// p = 1 version of the space.
[[nodiscard]] std::vector<VerificationReport> run_theorem_suite(
    const std::vector<FunctionModel>& functions, std::span<const int> k_values,
    const WeightedSpace& space, const SuiteOptions& options = {});

/// As above with a weight per member, resolved through builtin_space(weight_id, p).
[[nodiscard]] std::vector<VerificationReport> run_theorem_suite(
    const std::vector<SuiteMember>& members, std::span<const int> k_values, double p = 1.0,
    const SuiteOptions& options = {});

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int errors = 0;
};

[[nodiscard]] SuiteSummary summarize(std::span<const VerificationReport> reports);

/// `# schema=1` comment line, fixed header, one row per report, reals with
/// 17 significant digits.
[[nodiscard]] std::string reports_to_csv(std::span<const VerificationReport> reports);

/// Array of report objects; non-finite reals become null.
[[nodiscard]] std::string reports_to_json(std::span<const VerificationReport> reports);

[[nodiscard]] std::string to_string(CheckKind kind);

/// Shortest-exact ("%.17g") rendering used by every text output.
[[nodiscard]] std::string format_real(double v);

}  // namespace onesided
