// SPDX-License-Identifier: Apache-2.0
#include "onesided/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "onesided/errors.hpp"

namespace onesided {

namespace {

constexpr double kDomainSlack = 1e-12;

std::vector<double> difference_weights(int k) {
    // (-1)^{k-r} C(k, r)
    std::vector<double> w(static_cast<std::size_t>(k + 1));
    double binom = 1.0;
    for (int r = 0; r <= k; ++r) {
        w[static_cast<std::size_t>(r)] = ((k - r) % 2 == 0 ? 1.0 : -1.0) * binom;
        binom = binom * (k - r) / (r + 1);
    }
    return w;
}

std::vector<int> lattice_steps(const ModulusConfig& cfg) {
    const int max_step = cfg.window_samples - 1;
    std::vector<int> steps;
    if (cfg.step_samples - 1 >= max_step) {
        for (int s = 1; s <= max_step; ++s) steps.push_back(s);
        return steps;
    }
    for (int j = 1; j < cfg.step_samples; ++j) {
        const int s = static_cast<int>(std::lround(static_cast<double>(j) * max_step /
                                                   (cfg.step_samples - 1)));
        if (s >= 1 && (steps.empty() || steps.back() != s)) steps.push_back(s);
    }
    return steps;
}

}  // namespace

void validate(const ModulusConfig& cfg) {
    if (cfg.k < 1) throw ArgumentError("modulus order k must be >= 1");
    if (cfg.window_samples < 3) throw ArgumentError("window_samples must be >= 3");
    if (cfg.step_samples < 2) throw ArgumentError("step_samples must be >= 2");
}

double finite_difference(const FunctionModel& rho, double x, double h, int k) {
    if (k < 0) throw ArgumentError("difference order must be non-negative");
    const auto w = difference_weights(k);
    double sum = 0.0;
    for (int r = 0; r <= k; ++r) {
        const double t = x + r * h;
        if (t < -kDomainSlack || t > 1.0 + kDomainSlack || !std::isfinite(t)) {
            std::ostringstream msg;
            msg << "finite difference sample x + " << r << "h = " << t << " lies outside [0, 1]";
            throw DomainError(msg.str());
        }
        sum += w[static_cast<std::size_t>(r)] * rho(std::clamp(t, 0.0, 1.0));
    }
    return sum;
}

double local_modulus(const FunctionModel& rho, double x, double delta, const ModulusConfig& cfg) {
    validate(cfg);
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ArgumentError("delta must be positive");
    if (x < -kDomainSlack || x > 1.0 + kDomainSlack)
        throw DomainError("local modulus centre must lie in [0, 1]");

    const int k = cfg.k;
    const double lo = std::max(0.0, x - 0.5 * k * delta);
    const double hi = std::min(1.0, x + 0.5 * k * delta);
    const int intervals = k * (cfg.window_samples - 1);
    const double spacing = (hi - lo) / intervals;

    std::vector<double> values(static_cast<std::size_t>(intervals + 1));
    for (int j = 0; j <= intervals; ++j) {
        const double t = j == intervals ? hi : lo + j * spacing;
        values[static_cast<std::size_t>(j)] = rho(t);
    }

    const auto steps = lattice_steps(cfg);
    if (k == 1 && static_cast<int>(steps.size()) == cfg.window_samples - 1) {
        const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
        return *mx - *mn;
    }

    const auto w = difference_weights(k);
    double best = 0.0;
    for (int s : steps) {
        for (int i = 0; i + k * s <= intervals; ++i) {
            double diff = 0.0;
            for (int r = 0; r <= k; ++r)
                diff += w[static_cast<std::size_t>(r)] * values[static_cast<std::size_t>(i + r * s)];
            best = std::max(best, std::abs(diff));
        }
    }
    return best;
}

double averaged_modulus(const FunctionModel& rho, double delta, const ModulusConfig& cfg,
                        const WeightedSpace& space) {
    validate(cfg);
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ArgumentError("delta must be positive");
    // omega_k(rho, ., delta) has kinks where its window meets a special point
    // of rho or the boundary of X.
    const double h = 0.5 * cfg.k * delta;
    std::vector<double> breaks{h, 1.0 - h};
    std::vector<double> singular;
    for (double c : rho.breakpoints())
        for (double x : {c - h, c, c + h}) breaks.push_back(x);
    for (double c : rho.singular_points())
        for (double x : {c - h, c, c + h}) singular.push_back(x);
    return weighted_norm([&](double x) { return local_modulus(rho, x, delta, cfg); }, space,
                         Interval{0.0, 1.0}, QuadHints{breaks, singular});
}

}  // namespace onesided
