// SPDX-License-Identifier: Apache-2.0
// Acceptance harness: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "onesided/operators.hpp"
#include "onesided/registry.hpp"
#include "onesided/step_sandwich.hpp"
#include "onesided/verify.hpp"

#ifndef ONESIDED_CLI_PATH
#error "ONESIDED_CLI_PATH must name the onesided-cli executable"
#endif

using namespace onesided;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> join(std::initializer_list<const std::vector<double>*> lists) {
    std::vector<double> out;
    for (const auto* l : lists) out.insert(out.end(), l->begin(), l->end());
    return out;
}

// 1. certified step sandwich for every k in 2..40
Outcome step_sandwich_bound() {
    Outcome o;
    const auto start = Clock::now();
    double worst_margin = INFINITY;
    double worst_ratio = 0.0;
    for (int k = 2; k <= 40; ++k) {
        const SandwichPair pair = build_step_sandwich(k);
        const int dense = 10 * std::max(20 * k, 40);
        const Certificate cert = certify(pair, dense);
        const double margin = std::min(cert.lower_margin, cert.upper_margin);
        const double bound = 4.0 * kPi2 / (k + 2);
        worst_margin = std::min(worst_margin, margin);
        worst_ratio = std::max(worst_ratio, pair.gap / bound);
        if (margin < -1e-12 || pair.gap > bound) {
            o.pass = false;
            o.detail += " k=" + std::to_string(k);
        }
    }
    const double t = seconds_since(start);
    if (t > 60.0) o.pass = false;
    std::ostringstream d;
    d << "min margin " << worst_margin << ", max gap/bound " << worst_ratio << ", " << t << " s"
      << o.detail;
    o.detail = d.str();
    return o;
}

// 2. tau_1 of the identity against delta - delta^2 / 4
Outcome tau_exactness() {
    Outcome o;
    const auto start = Clock::now();
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    std::ostringstream d;
    double worst = 0.0;
    for (double delta : {0.05, 0.1, 0.2}) {
        const double tau = averaged_modulus(builtin_function("identity"), delta, {}, l1);
        const double err = std::abs(tau - (delta - delta * delta / 4.0));
        worst = std::max(worst, err);
        if (err > 5e-3) o.pass = false;
    }
    const double t = seconds_since(start);
    if (t > 5.0) o.pass = false;
    d << "max abs error " << worst << ", " << t << " s";
    o.detail = d.str();
    return o;
}

bool is_sandwich_check(const std::string& id) {
    return id == "smoother-sandwich" || id == "lower-chain" || id == "upper-chain" ||
           id == "composite-sandwich";
}

// 3. L <= G <= rho <= H <= J and A <= rho <= B on the default suite
Outcome sandwich_chain(const std::vector<VerificationReport>& reports, double seconds) {
    Outcome o;
    int checked = 0;
    int failed = 0;
    for (const auto& r : reports) {
        if (r.check_id == "suite-error") {
            ++failed;
            o.detail += " error(" + r.function_id + " k=" + std::to_string(r.params.k) + ")";
            continue;
        }
        if (!is_sandwich_check(r.check_id)) continue;
        ++checked;
        if (!r.pass) {
            ++failed;
            o.detail += " " + r.check_id + "(" + r.function_id + " k=" + std::to_string(r.params.k) + ")";
        }
    }
    // 6 members x 4 degrees x 4 orderings
    o.pass = failed == 0 && checked == 6 * 4 * 4 && seconds <= 300.0;
    std::ostringstream d;
    d << checked << " orderings, " << failed << " failures, suite " << seconds << " s" << o.detail;
    o.detail = d.str();
    return o;
}

// 4. ||rho - M_k rho||_1 <= gap(k) ||rho'||_1 for absolutely continuous members
Outcome kernel_bound() {
    Outcome o;
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    double worst = 0.0;
    for (const SuiteMember& m : default_suite()) {
        const FunctionModel& rho = m.rho;
        if (rho.has_singular_endpoint()) continue;
        const double drho = weighted_norm([&](double x) { return rho.derivative(x); }, l1, {0.0, 1.0},
                                          rho.quad_hints());
        for (int k = 2; k <= 16; ++k) {
            const SandwichPair& pair = cached_reflected_sandwich(k);
            const OperatorOutput mk = materialize_M(rho, pair);
            const double err = weighted_norm([&](double x) { return rho(x) - mk.poly(x); }, l1,
                                             {0.0, 1.0}, rho.quad_hints());
            const double rhs = pair.gap * drho;
            if (rhs > 0.0) worst = std::max(worst, err / rhs);
            if (err > rhs * (1.0 + 1e-6) + (rhs == 0.0 ? 1e-10 : 0.0)) {
                o.pass = false;
                o.detail += " " + rho.id() + "(k=" + std::to_string(k) + ")";
            }
        }
    }
    std::ostringstream d;
    d << "max ratio " << worst << o.detail;
    o.detail = d.str();
    return o;
}

// 5. ||rho - G_y rho||_{p,beta} <= 2 / (1-y)^{1/p} tau_1(rho, y) * 1.05
Outcome smoother_bound() {
    Outcome o;
    double worst = 0.0;
    for (double p : {1.0, 2.0}) {
        for (const SuiteMember& m : default_suite()) {
            const WeightedSpace space = builtin_space(m.weight_id, p);
            const FunctionModel& rho = m.rho;
            for (double y : {0.25, 0.125, 0.0625}) {
                const Smoother g = smooth_lower_G(rho, y);
                const FunctionModel gf = g.as_function();
                const std::vector<double> breaks = join({&rho.breakpoints(), &gf.breakpoints()});
                const std::vector<double> singular = join({&rho.singular_points(), &gf.singular_points()});
                const double lhs = weighted_norm([&](double x) { return rho(x) - gf(x); }, space,
                                                 {0.0, 1.0}, QuadHints{breaks, singular});
                const double tau = averaged_modulus(rho, y, {}, space);
                const double rhs = 2.0 / std::pow(1.0 - y, 1.0 / p) * tau;
                if (rhs > 0.0) worst = std::max(worst, lhs / rhs);
                const bool ok = rhs > 0.0 ? lhs <= rhs * 1.05 : lhs <= 1e-10;
                if (!ok) {
                    o.pass = false;
                    std::ostringstream d;
                    d << " " << rho.id() << "(p=" << p << " y=" << y << ")";
                    o.detail += d.str();
                }
            }
        }
    }
    std::ostringstream d;
    d << "max ratio " << worst << o.detail;
    o.detail = d.str();
    return o;
}

// 6. oracle value below ||B - A||_1 and two-sided below one-sided
Outcome oracle_dominance(const std::vector<VerificationReport>& reports) {
    Outcome o;
    int dominance = 0;
    int ordering = 0;
    for (const auto& r : reports) {
        const bool dom = r.check_id == "oracle-dominance";
        const bool ord = r.check_id == "oracle-ordering";
        if (!dom && !ord) continue;
        (dom ? dominance : ordering)++;
        if (!r.pass) {
            o.pass = false;
            o.detail += " " + r.check_id + "(" + r.function_id + " k=" + std::to_string(r.params.k) + ")";
        }
    }
    if (dominance != 24 || ordering != 24) o.pass = false;
    std::ostringstream d;
    d << dominance << " dominance and " << ordering << " ordering checks" << o.detail;
    o.detail = d.str();
    return o;
}

// 7. ||B_k - A_k||_1 nonincreasing in k with ratio to tau_1(rho, 1/k) under the bound
Outcome convergence_trend() {
    Outcome o;
    const WeightedSpace l1 = WeightedSpace::unweighted(1.0);
    std::ostringstream d;
    for (const char* id : {"identity", "exp"}) {
        const FunctionModel rho = builtin_function(id);
        double previous = INFINITY;
        d << id << ":";
        for (int k : {4, 8, 16, 32}) {
            const AutoPair ab = auto_pair_AB(rho, k);
            const double gap = weighted_norm(
                [&](double x) { return ab.upper.poly(x) - ab.lower.poly(x); }, l1);
            const double tau = averaged_modulus(rho, 1.0 / k, {}, l1);
            const double ratio = gap / tau;
            const double limit = 2.0 * (4.0 + 12.0 * k * kPi2 / (k + 2.0));
            d << " " << gap;
            if (gap > previous || !(ratio < limit)) {
                o.pass = false;
                d << "(!)";
            }
            previous = gap;
        }
        d << "; ";
    }
    o.detail = d.str();
    return o;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 8. two CLI runs of the default suite give identical bytes
Outcome determinism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "onesided-acceptance";
    std::filesystem::create_directories(dir);
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
        const auto file = dir / ("verify_" + std::to_string(run) + ".csv");
        std::filesystem::remove(file);
        const std::string cmd = std::string("\"") + ONESIDED_CLI_PATH + "\" verify --suite default --out \"" +
                                file.string() + "\" 2>/dev/null";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) {
            o.pass = false;
            o.detail = "verify exited with status " + std::to_string(rc);
            return o;
        }
        outputs[run] = slurp(file);
    }
    o.pass = !outputs[0].empty() && outputs[0] == outputs[1];
    o.detail = std::to_string(outputs[0].size()) + " bytes per run" + (o.pass ? "" : ", outputs differ");
    return o;
}

Outcome guarded(const std::function<Outcome()>& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return Outcome{false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

int main() {
    std::vector<VerificationReport> suite;
    double suite_seconds = 0.0;
    std::string suite_error;
    try {
        const auto start = Clock::now();
        const std::vector<int> ks{2, 4, 8, 16};
        suite = run_theorem_suite(default_suite(), ks);
        suite_seconds = seconds_since(start);
    } catch (const std::exception& e) {
        suite_error = e.what();
    }
    auto from_suite = [&](const std::function<Outcome()>& fn) {
        return [&, fn] { return suite_error.empty() ? fn() : Outcome{false, "suite failed: " + suite_error}; };
    };

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"step-sandwich bound", step_sandwich_bound},
        {"tau-modulus exactness", tau_exactness},
        {"sandwich chain", from_suite([&] { return sandwich_chain(suite, suite_seconds); })},
        {"kernel operator bound", kernel_bound},
        {"smoother bound", smoother_bound},
        {"oracle dominance", from_suite([&] { return oracle_dominance(suite); })},
        {"convergence trend", convergence_trend},
        {"determinism", determinism},
    };

    int failures = 0;
    int index = 1;
    for (const auto& [name, fn] : criteria) {
        const Outcome o = guarded(fn);
        if (!o.pass) ++failures;
        std::printf("criterion %d %-24s %s  %s\n", index++, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
