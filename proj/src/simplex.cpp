// SPDX-License-Identifier: Apache-2.0
#include "onesided/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "onesided/errors.hpp"

namespace onesided::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class At : unsigned char { lower, upper, basic };

// Working state shared by both phases. Columns n..n+m-1 are artificials
// with column sign_i * e_i.
class Engine {
public:
    Engine(const BoundedProblem& p, const Options& o)
        : p_(p), o_(o), m_(static_cast<int>(p.A.rows())), n_(static_cast<int>(p.A.cols())) {
        if (p.b.size() != m_ || p.c.size() != n_ || p.upper.size() != n_)
            throw ArgumentError("inconsistent LP dimensions");
        for (int j = 0; j < n_; ++j)
            if (!(p.upper[j] >= 0.0)) throw ArgumentError("LP upper bounds must be >= 0");

        upper_.resize(n_ + m_);
        for (int j = 0; j < n_; ++j) upper_[j] = p.upper[j];
        for (int i = 0; i < m_; ++i) upper_[n_ + i] = kInf;
        sign_.resize(m_);
        for (int i = 0; i < m_; ++i) sign_[i] = p.b[i] >= 0.0 ? 1.0 : -1.0;

        state_.assign(static_cast<std::size_t>(n_ + m_), At::lower);
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            state_[static_cast<std::size_t>(n_ + i)] = At::basic;
        }
        refactor();
    }

    Status run_phase(const Eigen::VectorXd& cost, int& iterations) {
        cost_ = cost;
        int degenerate_run = 0;
        int since_refactor = 0;
        const double cost_scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
        const double opt_tol = o_.optimality_tol * cost_scale;

        while (true) {
            if (iterations >= o_.max_iterations) return Status::iteration_limit;
            if (since_refactor >= o_.refactor_every) {
                refactor();
                since_refactor = 0;
            }
            const bool bland = degenerate_run > 50;
            compute_duals();

            int enter = -1;
            double best = 0.0;
            for (int j = 0; j < n_ + m_; ++j) {
                const At s = state_[static_cast<std::size_t>(j)];
                if (s == At::basic || upper_[j] == 0.0) continue;
                const double d = cost_[j] - column_dot(j, duals_);
                const bool improving = (s == At::lower && d < -opt_tol) || (s == At::upper && d > opt_tol);
                if (!improving) continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (std::abs(d) > best) {
                    best = std::abs(d);
                    enter = j;
                }
            }
            if (enter < 0) return Status::optimal;

            const double dir = state_[static_cast<std::size_t>(enter)] == At::lower ? 1.0 : -1.0;
            const Eigen::VectorXd w = binv_ * column(enter);

            double theta = upper_[enter];
            int leave = -1;
            bool leave_to_upper = false;
            double leave_pivot = 0.0;
            for (int i = 0; i < m_; ++i) {
                const double rate = -dir * w[i];
                if (std::abs(rate) <= o_.pivot_tol) continue;
                const int var = basis_[i];
                double limit;
                bool to_upper;
                if (rate < 0.0) {
                    limit = std::max(0.0, xb_[i]) / -rate;
                    to_upper = false;
                } else {
                    if (!std::isfinite(upper_[var])) continue;
                    limit = std::max(0.0, upper_[var] - xb_[i]) / rate;
                    to_upper = true;
                }
                bool take;
                if (leave < 0) {
                    take = limit < theta;
                } else if (limit < theta - 1e-12) {
                    take = true;
                } else {
                    take = limit <= theta + 1e-12 &&
                           (bland ? var < basis_[leave] : std::abs(rate) > leave_pivot);
                }
                if (take) {
                    theta = limit;
                    leave = i;
                    leave_to_upper = to_upper;
                    leave_pivot = std::abs(rate);
                }
            }
            if (!std::isfinite(theta)) return Status::unbounded;

            ++iterations;
            ++since_refactor;
            degenerate_run = theta <= 1e-12 ? degenerate_run + 1 : 0;

            xb_ -= dir * theta * w;
            if (leave < 0) {
                state_[static_cast<std::size_t>(enter)] =
                    dir > 0 ? At::upper : At::lower;
                continue;
            }
            const int out = basis_[leave];
            state_[static_cast<std::size_t>(out)] = leave_to_upper ? At::upper : At::lower;
            state_[static_cast<std::size_t>(enter)] = At::basic;
            basis_[leave] = enter;
            xb_[leave] = dir > 0 ? theta : upper_[enter] - theta;

            const double pivot = w[leave];
            const Eigen::RowVectorXd pivot_row = binv_.row(leave) / pivot;
            for (int i = 0; i < m_; ++i) {
                if (i == leave) continue;
                binv_.row(i) -= w[i] * pivot_row;
            }
            binv_.row(leave) = pivot_row;
        }
    }

    void refactor() {
        Eigen::MatrixXd B(m_, m_);
        for (int i = 0; i < m_; ++i) B.col(i) = column(basis_[i]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
        if (!lu.isInvertible()) throw InternalError("simplex basis became singular");
        binv_ = lu.inverse();
        Eigen::VectorXd rhs = p_.b;
        for (int j = 0; j < n_ + m_; ++j)
            if (state_[static_cast<std::size_t>(j)] == At::upper) rhs -= upper_[j] * column(j);
        xb_ = binv_ * rhs;
    }

    void compute_duals() {
        Eigen::VectorXd cb(m_);
        for (int i = 0; i < m_; ++i) cb[i] = cost_[basis_[i]];
        duals_ = binv_.transpose() * cb;
    }

    double artificial_mass() const {
        double total = 0.0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_) total += std::abs(xb_[i]);
        return total;
    }

    void fix_artificials() {
        for (int i = 0; i < m_; ++i) upper_[n_ + i] = 0.0;
    }

    Eigen::VectorXd primal() const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (int j = 0; j < n_; ++j)
            if (state_[static_cast<std::size_t>(j)] == At::upper) x[j] = upper_[j];
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = xb_[i];
        return x;
    }

    const Eigen::VectorXd& duals() const { return duals_; }
    int rows() const { return m_; }
    int cols() const { return n_; }

private:
    Eigen::VectorXd column(int j) const {
        if (j < n_) return p_.A.col(j);
        Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
        e[j - n_] = sign_[j - n_];
        return e;
    }

    double column_dot(int j, const Eigen::VectorXd& v) const {
        if (j < n_) return p_.A.col(j).dot(v);
        return sign_[j - n_] * v[j - n_];
    }

    const BoundedProblem& p_;
    const Options& o_;
    int m_;
    int n_;
    Eigen::VectorXd upper_;
    Eigen::VectorXd sign_;
    Eigen::VectorXd cost_;
    std::vector<At> state_;
    std::vector<int> basis_;
    Eigen::MatrixXd binv_;
    Eigen::VectorXd xb_;
    Eigen::VectorXd duals_;
};

}  // namespace

Solution solve(const BoundedProblem& problem, const Options& options) {
    Engine engine(problem, options);
    const int m = engine.rows();
    const int n = engine.cols();
    Solution sol;

    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
    phase1.tail(m).setOnes();
    sol.status = engine.run_phase(phase1, sol.iterations);
    if (sol.status != Status::optimal) return sol;
    engine.refactor();
    const double scale = std::max(1.0, problem.b.cwiseAbs().maxCoeff());
    if (engine.artificial_mass() > options.feasibility_tol * scale) {
        sol.status = Status::infeasible;
        return sol;
    }

    engine.fix_artificials();
    Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
    phase2.head(n) = problem.c;
    sol.status = engine.run_phase(phase2, sol.iterations);
    if (sol.status != Status::optimal) return sol;

    engine.refactor();
    engine.compute_duals();
    sol.x = engine.primal();
    sol.duals = engine.duals();
    sol.objective = problem.c.dot(sol.x);
    return sol;
}

FreeSolution minimize_over_halfspaces(const Eigen::MatrixXd& T, const Eigen::VectorXd& r,
                                      const Eigen::VectorXd& f, const Options& options) {
    BoundedProblem dual;
    dual.A = T.transpose();
    dual.b = f;
    dual.c = -r;
    dual.upper = Eigen::VectorXd::Constant(T.rows(), kInf);
    const Solution s = solve(dual, options);

    FreeSolution out;
    switch (s.status) {
        case Status::optimal: out.status = Status::optimal; break;
        case Status::infeasible: out.status = Status::unbounded; return out;
        case Status::unbounded: out.status = Status::infeasible; return out;
        case Status::iteration_limit: out.status = Status::iteration_limit; return out;
    }
    out.a = -s.duals;
    out.objective = f.dot(out.a);
    return out;
}

FreeSolution weighted_l1_fit(const Eigen::MatrixXd& T, const Eigen::VectorXd& r,
                             const Eigen::VectorXd& w, const Options& options) {
    if ((w.array() <= 0.0).any()) throw ArgumentError("L1 weights must be positive");
    // dual: max r^T lambda, T^T lambda = 0, -w <= lambda <= w; shift by w.
    BoundedProblem dual;
    dual.A = T.transpose();
    dual.b = T.transpose() * w;
    dual.c = -r;
    dual.upper = 2.0 * w;
    const Solution s = solve(dual, options);

    FreeSolution out;
    out.status = s.status;
    if (s.status != Status::optimal) return out;
    out.a = -s.duals;
    out.objective = (w.array() * (r - T * out.a).array().abs()).sum();
    return out;
}

}  // namespace onesided::lp
