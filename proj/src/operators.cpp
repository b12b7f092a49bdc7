// SPDX-License-Identifier: Apache-2.0
#include "onesided/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "onesided/errors.hpp"

namespace onesided {

namespace {

constexpr Interval kUnit{0.0, 1.0};

// rho(0) and the split derivative sampled on the outer quadrature grid.
struct KernelTable {
    QuadGrid grid;
    std::vector<double> plus;
    std::vector<double> minus;
    double origin = 0.0;
};

KernelTable tabulate(const FunctionModel& rho, const QuadConfig& quad) {
    KernelTable table;
    table.grid = quad_grid(0.0, 1.0, quad, rho.quad_hints());
    table.plus.resize(table.grid.x.size());
    table.minus.resize(table.grid.x.size());
    for (std::size_t i = 0; i < table.grid.x.size(); ++i) {
        const double d = rho.derivative(table.grid.x[i]);
        if (!std::isfinite(d)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "non-finite derivative of '" << rho.id() << "' at t=" << table.grid.x[i];
            throw EvaluationError(msg.str());
        }
        table.plus[i] = std::max(d, 0.0);
        table.minus[i] = std::max(-d, 0.0);
    }
    table.origin = rho(0.0);
    if (!std::isfinite(table.origin)) throw EvaluationError("non-finite value of '" + rho.id() + "' at 0");
    return table;
}

void require_reflected(const SandwichPair& pair) {
    if (pair.orientation != Orientation::reflected)
        throw ArgumentError("kernel operators need a reflected step sandwich (Phi* = 1 - Phi)");
}

// kernel_plus multiplies rho'_+, kernel_minus multiplies rho'_-.
double apply(const KernelTable& t, const Polynomial& kernel_plus, const Polynomial& kernel_minus,
             double x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < t.grid.x.size(); ++i) {
        const double s = std::clamp(t.grid.x[i] - x, -1.0, 1.0);
        double term = 0.0;
        if (t.plus[i] != 0.0) term += kernel_plus.eval_unchecked(s) * t.plus[i];
        if (t.minus[i] != 0.0) term -= kernel_minus.eval_unchecked(s) * t.minus[i];
        sum += t.grid.w[i] * term;
    }
    return t.origin + sum;
}

std::string pair_id(const SandwichPair& pair) {
    std::ostringstream id;
    id << "step-k" << pair.degree << (pair.orientation == Orientation::reflected ? "-reflected" : "");
    return id.str();
}

OperatorOutput materialize(const FunctionModel& rho, const SandwichPair& pair,
                           const QuadConfig& quad, Side side) {
    require_reflected(pair);
    const KernelTable table = tabulate(rho, quad);
    const Polynomial& kp = side == Side::lower ? pair.lower : pair.upper;
    const Polynomial& km = side == Side::lower ? pair.upper : pair.lower;
    Polynomial poly = Polynomial::interpolate([&](double x) { return apply(table, kp, km, x); },
                                              pair.degree, kUnit);
    return OperatorOutput{std::move(poly), side, OperatorParams{pair.degree, 0.0, pair_id(pair)},
                          side == Side::lower ? "M_k" : "N_k"};
}

void require_y(double y) {
    if (!(y > 0.0 && y < 1.0)) {
        std::ostringstream msg;
        msg << "smoothing parameter y=" << y << " must lie in (0, 1)";
        throw ArgumentError(msg.str());
    }
}

}  // namespace

SplitDerivative split_derivative(const FunctionModel& rho) {
    return SplitDerivative{[rho](double t) { return std::max(rho.derivative(t), 0.0); },
                           [rho](double t) { return std::max(-rho.derivative(t), 0.0); }};
}

double lower_op_M(const FunctionModel& rho, const SandwichPair& pair, double x, const QuadConfig& quad) {
    require_reflected(pair);
    if (!kUnit.contains(x)) throw DomainError("operator argument must lie in [0, 1]");
    return apply(tabulate(rho, quad), pair.lower, pair.upper, x);
}

double upper_op_N(const FunctionModel& rho, const SandwichPair& pair, double x, const QuadConfig& quad) {
    require_reflected(pair);
    if (!kUnit.contains(x)) throw DomainError("operator argument must lie in [0, 1]");
    return apply(tabulate(rho, quad), pair.upper, pair.lower, x);
}

OperatorOutput materialize_M(const FunctionModel& rho, const SandwichPair& pair, const QuadConfig& quad) {
    return materialize(rho, pair, quad, Side::lower);
}

OperatorOutput materialize_N(const FunctionModel& rho, const SandwichPair& pair, const QuadConfig& quad) {
    return materialize(rho, pair, quad, Side::upper);
}

Smoother::Smoother(FunctionModel rho, double y, Side side, ModulusConfig modulus, QuadConfig inner)
    : rho_(std::move(rho)), y_(y), side_(side), modulus_(modulus), inner_(inner) {
    require_y(y_);
    modulus_.k = 1;
    validate(modulus_);
    validate(inner_);

    // omega_1(rho, u, y) looks at rho on [u - y/2, u + y/2], so every special
    // point c of rho reappears at c +- y/2; the window also gets clipped by
    // X at u = y/2 and u = 1 - y/2.
    const double h = 0.5 * y_;
    auto spread = [h](const std::vector<double>& pts, std::vector<double>& out) {
        for (double c : pts)
            for (double u : {c - h, c, c + h})
                if (u >= 0.0 && u <= 1.0) out.push_back(u);
    };
    spread(rho_.breakpoints(), u_breaks_);
    spread(rho_.singular_points(), u_singular_);
    u_breaks_.push_back(h);
    u_breaks_.push_back(1.0 - h);

    // G'(x) samples the integrand at a = (1-y) x and a + y.
    auto to_x = [this](const std::vector<double>& pts, std::vector<double>& out) {
        for (double u : pts)
            for (double x : {u / (1.0 - y_), (u - y_) / (1.0 - y_)})
                if (x >= 0.0 && x <= 1.0) out.push_back(x);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    };
    to_x(u_breaks_, x_breaks_);
    to_x(u_singular_, x_singular_);
}

double Smoother::integrand(double u) const {
    const double omega = local_modulus(rho_, u, y_, modulus_);
    return side_ == Side::lower ? rho_(u) - omega : rho_(u) + omega;
}

double Smoother::operator()(double x) const {
    if (!kUnit.contains(x)) throw DomainError("smoother argument must lie in [0, 1]");
    const double a = (1.0 - y_) * x;
    const double b = std::min(1.0, a + y_);
    return quad_integrate([this](double u) { return integrand(u); }, a, b, inner_,
                          QuadHints{u_breaks_, u_singular_}) /
           y_;
}

double Smoother::derivative(double x) const {
    const double a = (1.0 - y_) * x;
    const double b = std::min(1.0, a + y_);
    return (1.0 - y_) / y_ * (integrand(b) - integrand(a));
}

FunctionModel Smoother::as_function() const {
    const Smoother self = *this;
    std::string id = (side_ == Side::lower ? "G[" : "H[") + rho_.id() + "]";
    FunctionModel model([self](double x) { return self(x); }, std::move(id));
    model.with_derivative([self](double x) { return self.derivative(x); })
        .with_breakpoints(x_breaks_)
        .with_singular_points(x_singular_);
    return model;
}

Smoother smooth_lower_G(const FunctionModel& rho, double y, const OperatorConfig& cfg) {
    return Smoother(rho, y, Side::lower, cfg.modulus, cfg.inner);
}

Smoother smooth_upper_H(const FunctionModel& rho, double y, const OperatorConfig& cfg) {
    return Smoother(rho, y, Side::upper, cfg.modulus, cfg.inner);
}

OperatorOutput composite_lower_L(const FunctionModel& rho, int k, double y, const OperatorConfig& cfg) {
    require_y(y);
    const Smoother g = smooth_lower_G(rho, y, cfg);
    OperatorOutput out = materialize_M(g.as_function(), cached_reflected_sandwich(k), cfg.outer);
    out.params.y = y;
    out.provenance = "L_{k,y}";
    return out;
}

OperatorOutput composite_upper_J(const FunctionModel& rho, int k, double y, const OperatorConfig& cfg) {
    require_y(y);
    const Smoother h = smooth_upper_H(rho, y, cfg);
    OperatorOutput out = materialize_N(h.as_function(), cached_reflected_sandwich(k), cfg.outer);
    out.params.y = y;
    out.provenance = "J_{k,y}";
    return out;
}

AutoPair auto_pair_AB(const FunctionModel& rho, int k, const OperatorConfig& cfg) {
    if (k < 2) throw ArgumentError("A_k / B_k need k >= 2");
    const double y = 1.0 / k;
    AutoPair pair{composite_lower_L(rho, k, y, cfg), composite_upper_J(rho, k, y, cfg)};
    pair.lower.provenance = "A_k";
    pair.upper.provenance = "B_k";
    return pair;
}

}  // namespace onesided
