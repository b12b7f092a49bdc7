// SPDX-License-Identifier: Apache-2.0
#include "onesided/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "onesided/errors.hpp"

namespace onesided {

namespace {

constexpr int kGradingLevels = 14;
constexpr double kGradingRatio = 0.15;

GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

}  // namespace

void validate(const QuadConfig& cfg) {
    if (cfg.panels < 1 || cfg.nodes < 1 || cfg.nodes > 256)
        throw ConfigError("quadrature needs panels >= 1 and 1 <= nodes <= 256");
    if (!(cfg.singular_offset > 0.0) || cfg.singular_offset >= 0.5)
        throw ConfigError("singular offset must lie in (0, 0.5)");
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

QuadGrid quad_grid(double a, double b, const QuadConfig& cfg, QuadHints hints) {
    validate(cfg);
    if (!(a <= b)) throw ArgumentError("quadrature interval must satisfy a <= b");
    QuadGrid grid;
    if (a == b) return grid;
    const GaussRule& rule = gauss_legendre(cfg.nodes);
    const double h = (b - a) / cfg.panels;

    auto add_panel = [&](double lo, double hi) {
        if (!(hi > lo)) return;
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            grid.x.push_back(mid + half * rule.nodes[i]);
            grid.w.push_back(half * rule.weights[i]);
        }
    };

    std::vector<double> singular(hints.singular.begin(), hints.singular.end());
    std::sort(singular.begin(), singular.end());
    std::vector<double> cuts(hints.breakpoints.begin(), hints.breakpoints.end());
    cuts.insert(cuts.end(), singular.begin(), singular.end());
    std::sort(cuts.begin(), cuts.end());

    // Sub-panels of [lo, hi] graded towards a singular point s <= lo
    // (toward_left) or s >= hi, keeping only the part inside [lo, hi].
    auto add_graded = [&](double lo, double hi, double s, bool toward_left) {
        std::vector<double> edges{lo, hi};
        const double span = toward_left ? hi - s : s - lo;
        double scale = 1.0;
        for (int level = 0; level < kGradingLevels; ++level) {
            scale *= kGradingRatio;
            const double e = toward_left ? s + span * scale : s - span * scale;
            if (e > lo && e < hi) edges.push_back(e);
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) add_panel(edges[i], edges[i + 1]);
    };

    auto near_left = [&](double lo, double hi) -> const double* {
        const double* best = nullptr;
        for (const double& s : singular)
            if (s <= lo && lo - s < hi - lo) best = &s;
        return best;
    };
    auto near_right = [&](double lo, double hi) -> const double* {
        for (const double& s : singular)
            if (s >= hi && s - hi < hi - lo) return &s;
        return nullptr;
    };

    auto add_piece = [&](double lo, double hi) {
        const double* left = near_left(lo, hi);
        const double* right = near_right(lo, hi);
        if (left && right) {
            const double mid = 0.5 * (lo + hi);
            add_graded(lo, mid, *left, true);
            add_graded(mid, hi, *right, false);
        } else if (left) {
            add_graded(lo, hi, *left, true);
        } else if (right) {
            add_graded(lo, hi, *right, false);
        } else {
            add_panel(lo, hi);
        }
    };

    grid.x.reserve(static_cast<std::size_t>(cfg.panels * cfg.nodes));
    grid.w.reserve(grid.x.capacity());
    for (int p = 0; p < cfg.panels; ++p) {
        const double lo = a + p * h;
        const double hi = p + 1 == cfg.panels ? b : a + (p + 1) * h;
        double cursor = lo;
        for (double bp : cuts) {
            if (bp > cursor && bp < hi) {
                add_piece(cursor, bp);
                cursor = bp;
            }
        }
        add_piece(cursor, hi);
    }
    return grid;
}

double quad_sum(const QuadGrid& grid, std::span<const double> values) {
    double total = 0.0;
    for (std::size_t i = 0; i < grid.w.size(); ++i) total += grid.w[i] * values[i];
    return total;
}

double quad_integrate(const RealFn& f, double a, double b, const QuadConfig& cfg, QuadHints hints) {
    const QuadGrid grid = quad_grid(a, b, cfg, hints);
    double total = 0.0;
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
        const double v = f(grid.x[i]);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "non-finite integrand value at node x=" << grid.x[i];
            throw EvaluationError(msg.str());
        }
        total += grid.w[i] * v;
    }
    return total;
}

}  // namespace onesided
