// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace onesided::lp {

/// Standard form with simple bounds:
///
///   minimize c^T x   subject to   A x = b,   0 <= x <= upper.
///
/// Entries of `upper` may be +infinity. Sized for the small, dense problems
/// this library produces (tens of rows, a few thousand columns).
struct BoundedProblem {
    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
    Eigen::VectorXd upper;
};

enum class Status { optimal, infeasible, unbounded, iteration_limit };

struct Options {
    int max_iterations = 50000;
    int refactor_every = 40;
    double pivot_tol = 1e-9;
    double optimality_tol = 1e-10;
    double feasibility_tol = 1e-9;
};

struct Solution {
    Status status = Status::iteration_limit;
    Eigen::VectorXd x;
    /// Simplex multipliers: reduced costs are c - A^T duals.
    Eigen::VectorXd duals;
    double objective = 0.0;
    int iterations = 0;
};

/// Two-phase bounded-variable revised simplex (Dantzig pricing, Bland's rule
/// after a run of degenerate pivots, periodic refactorization).
[[nodiscard]] Solution solve(const BoundedProblem& problem, const Options& options = {});

struct FreeSolution {
    Status status = Status::iteration_limit;
    Eigen::VectorXd a;
    double objective = 0.0;
};

/// minimize f^T a subject to T a >= r, with a unrestricted. Solved through
/// its dual (one row per unknown), so T may have many more rows than columns.
[[nodiscard]] FreeSolution minimize_over_halfspaces(const Eigen::MatrixXd& T,
                                                    const Eigen::VectorXd& r,
                                                    const Eigen::VectorXd& f,
                                                    const Options& options = {});

/// minimize sum_i w_i |r_i - (T a)_i| with w_i > 0, via the box-constrained
/// dual. The returned objective is recomputed from `a`.
[[nodiscard]] FreeSolution weighted_l1_fit(const Eigen::MatrixXd& T, const Eigen::VectorXd& r,
                                           const Eigen::VectorXd& w,
                                           const Options& options = {});

}  // namespace onesided::lp
