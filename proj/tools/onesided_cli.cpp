// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "onesided/onesided.h"
#include "run_config.hpp"

namespace onesided::cli {

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(osa_status status) {
    if (status != OSA_OK)
        throw CliError(std::string(osa_status_name(status)) + ": " + osa_last_error());
}

template <auto Free>
struct Deleter {
    template <class T>
    void operator()(T* p) const { Free(p); }
};
using FunctionPtr = std::unique_ptr<osa_function, Deleter<osa_function_free>>;
using SpacePtr = std::unique_ptr<osa_space, Deleter<osa_space_free>>;
using SandwichPtr = std::unique_ptr<osa_sandwich, Deleter<osa_step_sandwich_free>>;
using PolyPtr = std::unique_ptr<osa_poly, Deleter<osa_poly_free>>;
using ReportsPtr = std::unique_ptr<osa_report_list, Deleter<osa_report_list_free>>;
using StringPtr = std::unique_ptr<char, Deleter<osa_string_free>>;

using Cell = std::variant<std::string, double, long long>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
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

std::string render(const Table& t, Format format) {
    if (format == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                std::visit(
                    [&](const auto& v) {
                        using V = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<V, double>)
                            obj[t.columns[i]] =
                                std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
                        else
                            obj[t.columns[i]] = v;
                    },
                    row[i]);
            }
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# schema=1\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) out << format_real(v);
                    else if constexpr (std::is_same_v<V, long long>) out << v;
                    else out << csv_field(v);
                },
                row[i]);
        }
        out << '\n';
    }
    return out.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    file << text;
    if (!file) throw CliError("cannot write output file '" + cfg.output + "'");
}

FunctionPtr make_function(const RunConfig& cfg) {
    osa_function* f = nullptr;
    if (!cfg.expression.empty()) {
        check(osa_function_from_expr(cfg.expression.c_str(), cfg.singular_left, cfg.singular_right, &f));
    } else if (!cfg.function_id.empty()) {
        check(osa_function_from_id(cfg.function_id.c_str(), &f));
    } else {
        throw CliError("this command needs --fn or --expr");
    }
    return FunctionPtr(f);
}

SpacePtr make_space(const RunConfig& cfg) {
    osa_quad_config quad;
    osa_quad_config_default(&quad);
    quad.panels = cfg.panels;
    quad.nodes = cfg.nodes;
    osa_space* s = nullptr;
    if (!cfg.weight_expression.empty())
        check(osa_space_create_expr(cfg.p, cfg.weight_expression.c_str(), &quad, &s));
    else
        check(osa_space_create(cfg.p, cfg.weight_id.c_str(), &quad, &s));
    return SpacePtr(s);
}

std::vector<int> degrees(const RunConfig& cfg, const char* fallback) {
    try {
        return parse_k_spec(cfg.k.empty() ? fallback : cfg.k);
    } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
    }
}

std::string weight_label(const RunConfig& cfg) {
    return cfg.weight_expression.empty() ? cfg.weight_id : "expr:" + cfg.weight_expression;
}

int run_tau(const RunConfig& cfg) {
    const FunctionPtr f = make_function(cfg);
    const SpacePtr s = make_space(cfg);
    Table t{{"function_id", "weight_id", "k", "delta", "p", "tau"}, {}};
    for (int k : degrees(cfg, "1")) {
        osa_modulus_config m;
        osa_modulus_config_default(&m);
        m.k = k;
        double tau = 0.0;
        check(osa_averaged_modulus(f.get(), cfg.delta, &m, s.get(), &tau));
        t.rows.push_back({std::string(osa_function_id(f.get())), weight_label(cfg), static_cast<long long>(k),
                          cfg.delta, cfg.p, tau});
    }
    write_output(cfg, render(t, cfg.format));
    return 0;
}

int run_sandwich_step(const RunConfig& cfg) {
    Table t{{"k", "gap", "bound"}, {}};
    for (int k : degrees(cfg, "2:40")) {
        osa_sandwich* raw = nullptr;
        check(osa_step_sandwich_build(k, 0, &raw));
        const SandwichPtr pair(raw);
        double gap = 0.0;
        check(osa_step_sandwich_gap(pair.get(), &gap));
        const double bound = 4.0 * std::numbers::pi * std::numbers::pi / (k + 2.0);
        t.rows.push_back({static_cast<long long>(k), gap, bound});
    }
    write_output(cfg, render(t, cfg.format));
    return 0;
}

int run_approximate(const RunConfig& cfg) {
    const FunctionPtr f = make_function(cfg);
    const int n = cfg.grid_n > 0 ? cfg.grid_n : 101;
    if (n < 2) throw CliError("--grid-n must be at least 2");
    Table t{{"k", "y", "x", "rho", "lower", "upper"}, {}};
    for (int k : degrees(cfg, "8")) {
        const double y = cfg.y ? *cfg.y : 0.0;
        osa_poly* lo = nullptr;
        osa_poly* hi = nullptr;
        check(osa_approximate(f.get(), k, y, &lo, &hi));
        const PolyPtr lower(lo), upper(hi);
        const double y_used = cfg.y ? *cfg.y : 1.0 / k;
        for (int i = 0; i < n; ++i) {
            const double x = i + 1 == n ? 1.0 : static_cast<double>(i) / (n - 1);
            double r = 0.0, a = 0.0, b = 0.0;
            check(osa_function_eval(f.get(), x, &r));
            check(osa_poly_eval(lower.get(), x, &a));
            check(osa_poly_eval(upper.get(), x, &b));
            t.rows.push_back({static_cast<long long>(k), y_used, x, r, a, b});
        }
    }
    write_output(cfg, render(t, cfg.format));
    return 0;
}

int run_oracle(const RunConfig& cfg) {
    const FunctionPtr f = make_function(cfg);
    const SpacePtr s = make_space(cfg);
    const int n = cfg.grid_n > 0 ? cfg.grid_n : 512;
    Table t{{"function_id", "weight_id", "k", "grid_n", "onesided", "twosided"}, {}};
    for (int k : degrees(cfg, "2,4,8,16")) {
        double one = 0.0, two = 0.0;
        check(osa_oracle(f.get(), k, s.get(), n, 0, &one, nullptr, nullptr));
        check(osa_oracle(f.get(), k, s.get(), n, 1, &two, nullptr, nullptr));
        t.rows.push_back({std::string(osa_function_id(f.get())), weight_label(cfg), static_cast<long long>(k),
                          static_cast<long long>(n), one, two});
    }
    write_output(cfg, render(t, cfg.format));
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const std::vector<int> ks = degrees(cfg, "2,4,8,16");
    osa_report_list* raw = nullptr;
    if (!cfg.function_id.empty() || !cfg.expression.empty()) {
        const FunctionPtr f = make_function(cfg);
        const SpacePtr s = make_space(cfg);
        const osa_function* fns[] = {f.get()};
        check(osa_verify_suite(fns, 1, ks.data(), ks.size(), s.get(), &raw));
    } else {
        if (cfg.suite != "default") throw CliError("unknown suite '" + cfg.suite + "' (available: default)");
        check(osa_verify_default_suite(ks.data(), ks.size(), cfg.p, &raw));
    }
    const ReportsPtr reports(raw);
    char* text = nullptr;
    check(cfg.format == Format::json ? osa_reports_to_json(reports.get(), &text)
                                     : osa_reports_to_csv(reports.get(), &text));
    const StringPtr owned(text);
    write_output(cfg, owned.get());

    int total = 0, passed = 0, failed = 0;
    osa_report_summary(reports.get(), &total, &passed, &failed);
    std::cerr << "verify: " << total << " checks, " << passed << " passed, " << failed << " failed\n";
    for (std::size_t i = 0; i < osa_report_count(reports.get()); ++i) {
        osa_report r;
        check(osa_report_get(reports.get(), i, &r));
        if (r.pass) continue;
        std::cerr << "  FAIL " << r.check_id << " " << r.function_id << " k=" << r.k
                  << " lhs=" << format_real(r.lhs) << " rhs=" << format_real(r.rhs);
        if (*r.error) std::cerr << " (" << r.error << ")";
        std::cerr << '\n';
    }
    return failed > 0 ? kExitVerifyFailed : 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format, std::string& singular,
                bool& print_config) {
    sub->add_option("--fn", cfg.function_id, "built-in function id");
    sub->add_option("--expr", cfg.expression, "function as an expression in x");
    sub->add_option("--singular", singular, "pole of --expr at an endpoint")
        ->check(CLI::IsMember({"none", "left", "right", "both"}));
    sub->add_option("--k", cfg.k, "degree or order: n, a:b, a:b:step, comma lists");
    sub->add_option("--y", cfg.y, "smoothing parameter in (0, 1); default 1/k");
    sub->add_option("--p", cfg.p, "exponent p >= 1");
    sub->add_option("--delta", cfg.delta, "modulus step");
    sub->add_option("--weight", cfg.weight_id, "built-in weight id (one, inv_sqrt)");
    sub->add_option("--weight-expr", cfg.weight_expression, "weight as an expression in x");
    sub->add_option("--grid-n", cfg.grid_n, "grid size (command specific)");
    sub->add_option("--panels", cfg.panels, "quadrature panels");
    sub->add_option("--nodes", cfg.nodes, "Gauss nodes per panel");
    sub->add_option("--out", cfg.output, "output file (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "reserved; the pipeline is deterministic");
    sub->add_option("--suite", cfg.suite, "verification suite (default)");
    sub->add_flag("--print-config", print_config, "print the parsed configuration as JSON and exit");
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"One-sided polynomial approximation toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "csv";
    std::string singular = "none";
    bool print_config = false;
    const std::pair<Command, const char*> commands[] = {
        {Command::tau, "averaged modulus tau_k(rho, delta)"},
        {Command::sandwich_step, "step-function sandwich gaps against 4 pi^2 / (k + 2)"},
        {Command::approximate, "one-sided polynomial pair sampled on a grid"},
        {Command::oracle, "LP degrees of best one- and two-sided approximation"},
        {Command::verify, "run the theorem suite"},
    };
    std::vector<std::pair<Command, CLI::App*>> subs;
    for (const auto& [cmd, help] : commands) {
        CLI::App* sub = app.add_subcommand(to_string(cmd), help);
        add_common(sub, cfg, format, singular, print_config);
        subs.emplace_back(cmd, sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        for (const auto& [cmd, sub] : subs)
            if (sub->parsed()) cfg.command = cmd;
        cfg.format = parse_format(format);
        cfg.singular_left = singular == "left" || singular == "both";
        cfg.singular_right = singular == "right" || singular == "both";
        if (print_config) {
            std::cout << to_json(cfg).dump(2) << '\n';
            return 0;
        }
        switch (cfg.command) {
            case Command::tau: return run_tau(cfg);
            case Command::sandwich_step: return run_sandwich_step(cfg);
            case Command::approximate: return run_approximate(cfg);
            case Command::oracle: return run_oracle(cfg);
            case Command::verify: return run_verify(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "onesided-cli: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace onesided::cli

int main(int argc, char** argv) { return onesided::cli::run(argc, argv); }
