// SPDX-License-Identifier: Apache-2.0
#include "onesided/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "onesided/errors.hpp"
#include "onesided/oracle.hpp"
#include "onesided/step_sandwich.hpp"

namespace onesided {

namespace {

constexpr double kDegenerateTol = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Quadrature grid over [0, 1] honouring the hints of every listed model.
QuadGrid merged_grid(const QuadConfig& quad, std::initializer_list<const FunctionModel*> models) {
    std::vector<double> breaks;
    std::vector<double> singular;
    for (const FunctionModel* m : models) {
        breaks.insert(breaks.end(), m->breakpoints().begin(), m->breakpoints().end());
        singular.insert(singular.end(), m->singular_points().begin(), m->singular_points().end());
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::sort(singular.begin(), singular.end());
    singular.erase(std::unique(singular.begin(), singular.end()), singular.end());
    return quad_grid(0.0, 1.0, quad, QuadHints{breaks, singular});
}

// Weighted p-norm of the sampled values f_i on the grid.
struct GridNorm {
    const QuadGrid& grid;
    std::vector<double> beta;
    double p;

    GridNorm(const QuadGrid& g, const WeightedSpace& space) : grid(g), p(space.p()) {
        beta.reserve(g.x.size());
        for (double x : g.x) {
            const double b = space.weight(x);
            if (!(b > 0.0) || !std::isfinite(b)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "weight must be positive and finite; got " << b << " at x=" << x;
                throw ConfigError(msg.str());
            }
            beta.push_back(b);
        }
    }

    template <class F>
    double operator()(F&& f) const {
        double total = 0.0;
        for (std::size_t i = 0; i < grid.x.size(); ++i) {
            const double r = std::abs(f(i) / beta[i]);
            if (!std::isfinite(r)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "non-finite integrand at node x=" << grid.x[i];
                throw EvaluationError(msg.str());
            }
            total += grid.w[i] * (p == 1.0 ? r : std::pow(r, p));
        }
        return p == 1.0 ? total : std::pow(total, 1.0 / p);
    }
};

std::vector<double> sample(const RealFn& f, const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
}

VerificationReport& tag(VerificationReport& r, std::string check_id, const std::string& function_id,
                        const std::string& weight_id, CheckParams params) {
    r.check_id = std::move(check_id);
    r.function_id = function_id;
    r.weight_id = weight_id;
    r.params = params;
    return r;
}

bool absolutely_continuous(const FunctionModel& rho) { return !rho.has_singular_endpoint(); }

void run_member(const FunctionModel& rho, const WeightedSpace& space, int k,
                const SuiteOptions& opt, std::vector<VerificationReport>& out) {
    const std::string& fid = rho.id();
    const std::string& wid = space.weight_id();
    if (k < 2) throw ArgumentError("theorem suite needs k >= 2 (y = 1/k < 1)");
    const double y = 1.0 / k;
    const double p = space.p();
    const CheckParams params{k, y, p};
    auto push = [&](VerificationReport r, const char* id) {
        out.push_back(std::move(tag(r, id, fid, wid, params)));
    };

    const SandwichPair& pair = cached_reflected_sandwich(k);
    const double ck = p == 1.0 ? pair.gap : sandwich_gap(pair, WeightedSpace::unweighted(p));
    const double c1 = 2.0 / std::pow(1.0 - y, 1.0 / p);

    ModulusConfig first = opt.modulus;
    first.k = 1;
    const double tau = averaged_modulus(rho, y, first, space);

    const Smoother g = smooth_lower_G(rho, y, opt.operators);
    const Smoother h = smooth_upper_H(rho, y, opt.operators);
    const FunctionModel gf = g.as_function();
    const FunctionModel hf = h.as_function();
    const OperatorOutput lower = materialize_M(gf, pair, opt.operators.outer);
    const OperatorOutput upper = materialize_N(hf, pair, opt.operators.outer);
    const Polynomial& lp = lower.poly;
    const Polynomial& jp = upper.poly;
    auto lfun = [&lp](double x) { return lp(x); };
    auto jfun = [&jp](double x) { return jp(x); };
    auto gfun = [&gf](double x) { return gf(x); };
    auto hfun = [&hf](double x) { return hf(x); };

    // Orderings on the uniform grid.
    push(check_sandwich(gfun, rho, hfun, opt.sandwich_grid, opt.sandwich_tol), "smoother-sandwich");
    push(check_sandwich(lfun, gf, gfun, opt.sandwich_grid, opt.sandwich_tol), "lower-chain");
    push(check_sandwich(hfun, hf, jfun, opt.sandwich_grid, opt.sandwich_tol), "upper-chain");
    push(check_sandwich(lfun, rho, jfun, opt.sandwich_grid, opt.sandwich_tol), "composite-sandwich");

    // Norms on a shared quadrature grid.
    const QuadGrid grid = merged_grid(space.quad(), {&rho, &gf, &hf});
    const GridNorm norm(grid, space);
    const std::vector<double> rv = sample([&rho](double x) { return rho(x); }, grid.x);
    const std::vector<double> gv = sample(gfun, grid.x);
    const std::vector<double> hv = sample(hfun, grid.x);
    const std::vector<double> lv = sample(lfun, grid.x);
    const std::vector<double> jv = sample(jfun, grid.x);
    const std::vector<double> dg = sample([&g](double x) { return g.derivative(x); }, grid.x);
    const std::vector<double> dh = sample([&h](double x) { return h.derivative(x); }, grid.x);

    const double deriv = std::max(norm([&](std::size_t i) { return dg[i]; }),
                                  norm([&](std::size_t i) { return dh[i]; }));
    push(check_bound(deriv, 3.0 / y, tau, opt.tau_slack), "smoother-derivative-bound");

    if (absolutely_continuous(rho)) {
        const OperatorOutput m = materialize_M(rho, pair, opt.operators.outer);
        const OperatorOutput n = materialize_N(rho, pair, opt.operators.outer);
        push(check_sandwich([&](double x) { return m.poly(x); }, rho,
                            [&](double x) { return n.poly(x); }, opt.sandwich_grid, opt.sandwich_tol),
             "kernel-sandwich");
        const QuadGrid rgrid = merged_grid(space.quad(), {&rho});
        const GridNorm rnorm(rgrid, space);
        const double drho = rnorm([&](std::size_t i) { return rho.derivative(rgrid.x[i]); });
        const double em = rnorm([&](std::size_t i) { return rho(rgrid.x[i]) - m.poly(rgrid.x[i]); });
        const double en = rnorm([&](std::size_t i) { return rho(rgrid.x[i]) - n.poly(rgrid.x[i]); });
        push(check_bound(em, ck, drho, opt.exact_slack), "kernel-bound-M");
        push(check_bound(en, ck, drho, opt.exact_slack), "kernel-bound-N");
    }

    push(check_bound(norm([&](std::size_t i) { return rv[i] - gv[i]; }), c1, tau, opt.tau_slack),
         "smoother-bound-G");
    push(check_bound(norm([&](std::size_t i) { return rv[i] - hv[i]; }), c1, tau, opt.tau_slack),
         "smoother-bound-H");
    push(check_bound(norm([&](std::size_t i) { return hv[i] - gv[i]; }), 2.0 * c1, tau, opt.tau_slack),
         "smoother-gap");

    const double c42 = c1 + 3.0 * ck / y;
    const double el = norm([&](std::size_t i) { return rv[i] - lv[i]; });
    const double ej = norm([&](std::size_t i) { return rv[i] - jv[i]; });
    const double ejl = norm([&](std::size_t i) { return jv[i] - lv[i]; });
    push(check_bound(el, c42, tau, opt.tau_slack), "composite-bound-L");
    push(check_bound(ej, c42, tau, opt.tau_slack), "composite-bound-J");
    push(check_bound(ejl, 2.0 * c42, tau, opt.tau_slack), "composite-gap");

    const double c43 = 2.0 * (c1 + 12.0 * k * std::numbers::pi * std::numbers::pi / (k + 2.0));
    push(check_bound(ejl, c43, tau, opt.tau_slack), "auto-pair-bound");

    // Oracle comparisons in L_{1, beta}.
    const WeightedSpace l1 = space.with_p(1.0);
    const double ab = p == 1.0 ? ejl : GridNorm(grid, l1)([&](std::size_t i) { return jv[i] - lv[i]; });
    const OracleResult one = best_onesided(rho, k, l1, opt.oracle_grid);
    const OracleResult two = best_twosided(rho, k, l1, opt.oracle_grid);
    VerificationReport dom = check_dominance(one.value, ab, opt.dominance_tol);
    dom.grid_n = opt.oracle_grid;
    out.push_back(std::move(tag(dom, "oracle-dominance", fid, wid, CheckParams{k, y, 1.0})));
    VerificationReport ord = check_dominance(two.value, one.value, opt.dominance_tol);
    ord.grid_n = opt.oracle_grid;
    out.push_back(std::move(tag(ord, "oracle-ordering", fid, wid, CheckParams{k, y, 1.0})));
}

VerificationReport error_report(const std::string& check_id, const std::string& fid,
                                const std::string& wid, CheckParams params, const std::string& what) {
    VerificationReport r;
    tag(r, check_id, fid, wid, params);
    r.kind = CheckKind::bound;
    r.lhs = r.rhs = r.ratio = r.min_margin = std::numeric_limits<double>::quiet_NaN();
    r.pass = false;
    r.error = what;
    return r;
}

std::vector<VerificationReport> run_suite(const std::vector<std::pair<FunctionModel, WeightedSpace>>& members,
                                          std::span<const int> k_values, double p,
                                          const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    for (int k : k_values) {
        const CheckParams params{k, k > 0 ? 1.0 / k : 0.0, p};
        try {
            // The step gap bound is an unweighted L1 statement.
            const double gap = cached_step_sandwich(k).gap;
            VerificationReport r = check_bound(gap, 4.0 * std::numbers::pi * std::numbers::pi / (k + 2.0),
                                               1.0, 0.0);
            out.push_back(std::move(tag(r, "step-gap-bound", "step", "one", CheckParams{k, 0.0, 1.0})));
        } catch (const std::exception& e) {
            out.push_back(error_report("step-gap-bound", "step", "one", CheckParams{k, 0.0, 1.0}, e.what()));
        }
        for (const auto& [rho, space] : members) {
            try {
                run_member(rho, space, k, opt, out);
            } catch (const std::exception& e) {
                out.push_back(error_report("suite-error", rho.id(), space.weight_id(), params, e.what()));
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
        return std::tie(a.check_id, a.function_id, a.params.k) <
               std::tie(b.check_id, b.function_id, b.params.k);
    });
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::sandwich: return "sandwich";
        case CheckKind::bound: return "bound";
        case CheckKind::dominance: return "dominance";
    }
    return "unknown";
}

VerificationReport check_sandwich(const RealFn& lower, const FunctionModel& rho, const RealFn& upper,
                                  int grid_n, double tol) {
    VerificationReport r;
    r.kind = CheckKind::sandwich;
    r.function_id = rho.id();
    r.grid_n = grid_n;
    if (grid_n < 2) throw ArgumentError("sandwich grid needs at least two points");
    double lo = kInf;
    double up = kInf;
    try {
        for (int i = 0; i < grid_n; ++i) {
            const double x = i + 1 == grid_n ? 1.0 : static_cast<double>(i) / (grid_n - 1);
            if (rho.at_singularity(x)) continue;
            const double v = rho(x);
            const double a = v - lower(x);
            const double b = upper(x) - v;
            if (!std::isfinite(a) || !std::isfinite(b)) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "non-finite sandwich margin at x=" << x;
                throw EvaluationError(msg.str());
            }
            lo = std::min(lo, a);
            up = std::min(up, b);
        }
    } catch (const std::exception& e) {
        r.lhs = r.rhs = r.min_margin = std::numeric_limits<double>::quiet_NaN();
        r.pass = false;
        r.error = e.what();
        return r;
    }
    r.lhs = lo;
    r.rhs = up;
    r.ratio = 0.0;
    r.min_margin = std::min(lo, up);
    r.pass = r.min_margin >= -tol;
    return r;
}

VerificationReport check_bound(double lhs_norm, double constant, double modulus, double slack) {
    if (!std::isfinite(lhs_norm) || !std::isfinite(constant) || !std::isfinite(modulus))
        throw ArgumentError("bound inputs must be finite");
    if (!(constant > 0.0)) throw ArgumentError("bound constant must be positive");
    if (modulus < 0.0 || lhs_norm < 0.0) throw ArgumentError("norms must be non-negative");
    VerificationReport r;
    r.kind = CheckKind::bound;
    r.lhs = lhs_norm;
    r.rhs = constant * modulus;
    r.min_margin = r.rhs - r.lhs;
    if (r.rhs == 0.0) {
        r.pass = lhs_norm <= kDegenerateTol;
        r.ratio = r.pass ? 0.0 : kInf;
    } else {
        r.ratio = lhs_norm / r.rhs;
        r.pass = r.ratio <= 1.0 + slack;
    }
    return r;
}

VerificationReport check_dominance(double lhs, double rhs, double tol) {
    VerificationReport r;
    r.kind = CheckKind::dominance;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs != 0.0 ? lhs / rhs : (lhs <= tol ? 0.0 : kInf);
    r.min_margin = rhs - lhs;
    r.pass = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs + tol;
    return r;
}

std::vector<VerificationReport> run_theorem_suite(const std::vector<FunctionModel>& functions,
                                                  std::span<const int> k_values,
                                                  const WeightedSpace& space, const SuiteOptions& options) {
    std::vector<std::pair<FunctionModel, WeightedSpace>> members;
    for (const FunctionModel& f : functions) members.emplace_back(f, space);
    return run_suite(members, k_values, space.p(), options);
}

std::vector<VerificationReport> run_theorem_suite(const std::vector<SuiteMember>& suite,
                                                  std::span<const int> k_values, double p,
                                                  const SuiteOptions& options) {
    std::vector<std::pair<FunctionModel, WeightedSpace>> members;
    for (const SuiteMember& m : suite)
        members.emplace_back(m.rho, builtin_space(m.weight_id, p, options.operators.outer));
    return run_suite(members, k_values, p, options);
}

SuiteSummary summarize(std::span<const VerificationReport> reports) {
    SuiteSummary s;
    for (const VerificationReport& r : reports) {
        ++s.total;
        if (r.pass) ++s.passed;
        else ++s.failed;
        if (!r.error.empty()) ++s.errors;
    }
    return s;
}

std::string reports_to_csv(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    out << "# schema=1\n"
        << "check_id,function_id,weight_id,kind,k,y,p,lhs,rhs,ratio,min_margin,pass,grid_n,error\n";
    for (const VerificationReport& r : reports) {
        out << csv_field(r.check_id) << ',' << csv_field(r.function_id) << ',' << csv_field(r.weight_id)
            << ',' << to_string(r.kind) << ',' << r.params.k << ',' << format_real(r.params.y) << ','
            << format_real(r.params.p) << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
            << format_real(r.ratio) << ',' << format_real(r.min_margin) << ','
            << (r.pass ? "true" : "false") << ',' << r.grid_n << ',' << csv_field(r.error) << '\n';
    }
    return out.str();
}

std::string reports_to_json(std::span<const VerificationReport> reports) {
    auto real = [](double v) -> nlohmann::json {
        if (!std::isfinite(v)) return nullptr;
        return v;
    };
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::json j;
        j["check_id"] = r.check_id;
        j["function_id"] = r.function_id;
        j["weight_id"] = r.weight_id;
        j["kind"] = to_string(r.kind);
        j["params"] = {{"k", r.params.k}, {"y", real(r.params.y)}, {"p", real(r.params.p)}};
        j["lhs"] = real(r.lhs);
        j["rhs"] = real(r.rhs);
        j["ratio"] = real(r.ratio);
        j["min_margin"] = real(r.min_margin);
        j["pass"] = r.pass;
        j["grid_n"] = r.grid_n;
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace onesided
