// SPDX-License-Identifier: Apache-2.0
#include "onesided/step_sandwich.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "onesided/errors.hpp"
#include "onesided/simplex.hpp"

namespace onesided {

namespace {

constexpr Interval kReference{-1.0, 1.0};
constexpr double kCertificationTol = 1e-12;

Eigen::MatrixXd chebyshev_matrix(const std::vector<double>& s, int k) {
    Eigen::MatrixXd T(static_cast<Eigen::Index>(s.size()), k + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        T(row, 0) = 1.0;
        if (k >= 1) T(row, 1) = s[i];
        for (int j = 2; j <= k; ++j) T(row, j) = 2.0 * s[i] * T(row, j - 1) - T(row, j - 2);
    }
    return T;
}

Eigen::VectorXd chebyshev_integrals(int k) {
    Eigen::VectorXd I = Eigen::VectorXd::Zero(k + 1);
    for (int j = 0; j <= k; j += 2) I[j] = 2.0 / (1.0 - static_cast<double>(j) * j);
    return I;
}

struct Piece {
    double lo;
    double hi;
    double target;
};

// The LP enforces the closure of the step at the jump: the majorant must
// reach 1 at u = 0 and the minorant must stay below 0 there.
std::vector<Piece> pieces() { return {{-1.0, 0.0, 0.0}, {0.0, 1.0, 1.0}}; }

double piece_target(double s) { return s >= 0.0 ? 1.0 : 0.0; }
double piece_target_lower(double s) { return s > 0.0 ? 1.0 : 0.0; }

double margin(const Polynomial& poly, bool is_upper, double s, double target) {
    const double v = poly.eval_unchecked(s);
    return is_upper ? v - target : target - v;
}

double golden_minimize(const Polynomial& poly, bool is_upper, double target, double a, double b,
                       double& arg) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = margin(poly, is_upper, c, target);
    double fd = margin(poly, is_upper, d, target);
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = margin(poly, is_upper, c, target);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = margin(poly, is_upper, d, target);
        }
    }
    arg = fc < fd ? c : d;
    return std::min(fc, fd);
}

// Local minimisers of the margin on each closed piece, refined by golden
// section from a uniform scan.
std::vector<std::pair<double, double>> margin_minima(const Polynomial& poly, bool is_upper,
                                                     int scan) {
    std::vector<std::pair<double, double>> out;
    for (const Piece& piece : pieces()) {
        std::vector<double> s(static_cast<std::size_t>(scan + 1));
        std::vector<double> m(s.size());
        for (int i = 0; i <= scan; ++i) {
            s[static_cast<std::size_t>(i)] =
                i == scan ? piece.hi : piece.lo + (piece.hi - piece.lo) * i / scan;
            m[static_cast<std::size_t>(i)] = margin(poly, is_upper, s[static_cast<std::size_t>(i)], piece.target);
        }
        for (int i = 0; i <= scan; ++i) {
            const auto u = static_cast<std::size_t>(i);
            const bool left_ok = i == 0 || m[u] <= m[u - 1];
            const bool right_ok = i == scan || m[u] <= m[u + 1];
            if (!left_ok || !right_ok) continue;
            if (i == 0 || i == scan) {
                out.emplace_back(s[u], m[u]);
            }
            const double a = s[i == 0 ? u : u - 1];
            const double b = s[i == scan ? u : u + 1];
            double arg = s[u];
            const double val = golden_minimize(poly, is_upper, piece.target, a, b, arg);
            out.emplace_back(arg, val);
        }
    }
    return out;
}

Polynomial solve_side(bool is_upper, int k, int cert_nodes, double safety, int max_rounds) {
    std::vector<double> nodes;
    const int half = std::max(2, cert_nodes / 2);
    for (double s : chebyshev_points(half, {-1.0, 0.0})) nodes.push_back(s);
    for (double s : chebyshev_points(half, {0.0, 1.0})) nodes.push_back(s);
    nodes.push_back(-1.0);
    nodes.push_back(0.0);
    nodes.push_back(1.0);

    const Eigen::VectorXd integrals = chebyshev_integrals(k);
    std::vector<double> coeffs;
    for (int round = 0; round <= max_rounds; ++round) {
        const Eigen::MatrixXd T = chebyshev_matrix(nodes, k);
        Eigen::VectorXd r(T.rows());
        lp::FreeSolution sol;
        if (is_upper) {
            for (Eigen::Index i = 0; i < r.size(); ++i)
                r[i] = piece_target(nodes[static_cast<std::size_t>(i)]) + safety;
            sol = lp::minimize_over_halfspaces(T, r, integrals);
        } else {
            for (Eigen::Index i = 0; i < r.size(); ++i)
                r[i] = -(piece_target_lower(nodes[static_cast<std::size_t>(i)]) - safety);
            sol = lp::minimize_over_halfspaces(-T, r, -integrals);
        }
        if (sol.status != lp::Status::optimal) {
            std::ostringstream msg;
            msg << "step sandwich LP failed for degree " << k << " (status "
                << static_cast<int>(sol.status) << ")";
            throw InternalError(msg.str());
        }
        coeffs.assign(sol.a.data(), sol.a.data() + sol.a.size());
        const Polynomial poly(coeffs, kReference);

        bool added = false;
        for (const auto& [arg, val] : margin_minima(poly, is_upper, 8 * cert_nodes)) {
            if (val >= 0.5 * safety) continue;
            const bool known = std::any_of(nodes.begin(), nodes.end(),
                                           [&](double s) { return std::abs(s - arg) < 1e-13; });
            if (known) continue;
            nodes.push_back(arg);
            added = true;
        }
        if (!added) break;
    }
    return Polynomial(coeffs, kReference);
}

}  // namespace

double step(double x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << "step function evaluated at " << x << " outside [-1, 1]";
        throw DomainError(msg.str());
    }
    return x <= 0.0 ? 0.0 : 1.0;
}

double reflected_step(double x) { return 1.0 - step(x); }

double step_target(Orientation orientation, double u) {
    return orientation == Orientation::standard ? step(u) : reflected_step(u);
}

Certificate certify(const SandwichPair& pair, int nodes) {
    if (nodes < 2) throw ArgumentError("certification needs at least two nodes");
    Certificate cert{std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity(), nodes + 1};
    auto visit = [&](double s) {
        const double target = step_target(pair.orientation, s);
        cert.lower_margin = std::min(cert.lower_margin, target - pair.lower(s));
        cert.upper_margin = std::min(cert.upper_margin, pair.upper(s) - target);
    };
    for (int i = 0; i < nodes; ++i) visit(i + 1 == nodes ? 1.0 : -1.0 + 2.0 * i / (nodes - 1));
    visit(0.0);
    return cert;
}

SandwichPair build_step_sandwich(int k, const StepSandwichOptions& options) {
    if (k < 0) throw ArgumentError("sandwich degree must be >= 0");
    if (k == 0) {
        return SandwichPair{Polynomial::constant(0.0, kReference),
                            Polynomial::constant(1.0, kReference), 0, Orientation::standard, 2.0, 0};
    }
    const int cert_nodes = options.cert_nodes > 0 ? options.cert_nodes : std::max(20 * k, 40);
    if (cert_nodes < 20 * k) throw ArgumentError("cert_nodes must be at least 20 k");
    if (!(options.safety >= 0.0)) throw ArgumentError("safety slack must be non-negative");

    double safety = options.safety;
    for (int attempt = 0; attempt <= options.max_retries; ++attempt, safety *= 10.0) {
        Polynomial upper = solve_side(true, k, cert_nodes, safety, options.max_rounds);
        Polynomial lower = solve_side(false, k, cert_nodes, safety, options.max_rounds);
        const Polynomial diff = upper - lower;
        const double gap = quad_integrate([&](double s) { return diff.eval_unchecked(s); }, -1.0,
                                          1.0, QuadConfig{});
        SandwichPair pair{std::move(lower), std::move(upper), k, Orientation::standard, gap,
                          10 * cert_nodes};
        const Certificate cert = certify(pair, pair.margin_grid);
        if (cert.lower_margin >= -kCertificationTol && cert.upper_margin >= -kCertificationTol)
            return pair;
    }
    std::ostringstream msg;
    msg << "step sandwich of degree " << k << " failed dense-grid certification";
    throw InternalError(msg.str());
}

SandwichPair build_step_sandwich(int k, int cert_nodes, double safety) {
    StepSandwichOptions options;
    options.cert_nodes = cert_nodes;
    options.safety = safety;
    return build_step_sandwich(k, options);
}

const SandwichPair& cached_step_sandwich(int k) {
    static std::mutex mutex;
    static std::map<int, SandwichPair> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_step_sandwich(k)).first;
    return it->second;
}

const SandwichPair& cached_reflected_sandwich(int k) {
    static std::mutex mutex;
    static std::map<int, SandwichPair> cache;
    const SandwichPair& standard = cached_step_sandwich(k);
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, reflect_pair(standard)).first;
    return it->second;
}

double sandwich_gap(const SandwichPair& pair, const WeightedSpace& space) {
    const Polynomial diff = pair.upper - pair.lower;
    return weighted_norm([&](double s) { return diff.eval_unchecked(s); }, space, kReference);
}

SandwichPair reflect_pair(const SandwichPair& pair) {
    if (pair.orientation == Orientation::reflected)
        throw ArgumentError("sandwich pair is already reflected");
    SandwichPair out{1.0 - pair.upper, 1.0 - pair.lower, pair.degree, Orientation::reflected,
                     pair.gap, pair.margin_grid};
    return out;
}

}  // namespace onesided
