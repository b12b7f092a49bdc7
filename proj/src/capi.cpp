// SPDX-License-Identifier: Apache-2.0
#include "onesided/onesided.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "onesided/errors.hpp"
#include "onesided/expression.hpp"
#include "onesided/moduli.hpp"
#include "onesided/operators.hpp"
#include "onesided/oracle.hpp"
#include "onesided/registry.hpp"
#include "onesided/step_sandwich.hpp"
#include "onesided/verify.hpp"

using namespace onesided;

struct osa_function {
    FunctionModel model;
};

struct osa_space {
    WeightedSpace space;
};

struct osa_sandwich {
    SandwichPair pair;
};

struct osa_poly {
    Polynomial poly;
};

struct osa_report_list {
    std::vector<VerificationReport> reports;
    std::vector<std::string> kinds;
};

namespace {

double in_unit(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("argument " + std::to_string(x) + " lies outside [0, 1]");
    return x;
}

thread_local std::string g_last_error;

osa_status fail(osa_status status, const char* what) {
    g_last_error = what;
    return status;
}

// Runs body, translating the exception taxonomy into status codes.
template <class F>
osa_status guarded(F&& body) {
    try {
        body();
        return OSA_OK;
    } catch (const UnknownIdError& e) {
        return fail(OSA_ERR_NOT_FOUND, e.what());
    } catch (const ParseError& e) {
        return fail(OSA_ERR_PARSE, e.what());
    } catch (const ArgumentError& e) {
        return fail(OSA_ERR_ARGUMENT, e.what());
    } catch (const DomainError& e) {
        return fail(OSA_ERR_DOMAIN, e.what());
    } catch (const EvaluationError& e) {
        return fail(OSA_ERR_EVALUATION, e.what());
    } catch (const ConfigError& e) {
        return fail(OSA_ERR_CONFIG, e.what());
    } catch (const UnsupportedError& e) {
        return fail(OSA_ERR_UNSUPPORTED, e.what());
    } catch (const std::bad_alloc&) {
        return fail(OSA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(OSA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(OSA_ERR_INTERNAL, "unknown exception");
    }
}

#define OSA_REQUIRE(ptr)                                                     \
    do {                                                                     \
        if (!(ptr)) return fail(OSA_ERR_ARGUMENT, "null argument: " #ptr);   \
    } while (0)

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

QuadConfig to_quad(const osa_quad_config* cfg) {
    QuadConfig q;
    if (cfg) q = QuadConfig{cfg->panels, cfg->nodes, cfg->singular_offset};
    validate(q);
    return q;
}

ModulusConfig to_modulus(const osa_modulus_config* cfg) {
    ModulusConfig m;
    if (cfg) m = ModulusConfig{cfg->k, cfg->window_samples, cfg->step_samples};
    validate(m);
    return m;
}

void emit(const Polynomial& p, osa_poly** out) {
    if (out) *out = new osa_poly{p};
}

}  // namespace

extern "C" {

const char* osa_version(void) { return "0.1.0"; }

const char* osa_last_error(void) { return g_last_error.c_str(); }

const char* osa_status_name(osa_status status) {
    switch (status) {
        case OSA_OK: return "ok";
        case OSA_ERR_DOMAIN: return "domain error";
        case OSA_ERR_ARGUMENT: return "argument error";
        case OSA_ERR_EVALUATION: return "evaluation error";
        case OSA_ERR_CONFIG: return "configuration error";
        case OSA_ERR_UNSUPPORTED: return "unsupported";
        case OSA_ERR_INTERNAL: return "internal error";
        case OSA_ERR_NOT_FOUND: return "not found";
        case OSA_ERR_PARSE: return "parse error";
    }
    return "unknown status";
}

void osa_string_free(char* s) { std::free(s); }

osa_status osa_function_from_id(const char* id, osa_function** out) {
    OSA_REQUIRE(id);
    OSA_REQUIRE(out);
    return guarded([&] { *out = new osa_function{builtin_function(id)}; });
}

osa_status osa_function_from_expr(const char* expr, int singular_left, int singular_right,
                                  osa_function** out) {
    OSA_REQUIRE(expr);
    OSA_REQUIRE(out);
    return guarded([&] {
        FunctionModel model = expression_function(expr);
        if (singular_left || singular_right) model.with_singular(singular_left != 0, singular_right != 0);
        *out = new osa_function{std::move(model)};
    });
}

osa_status osa_function_eval(const osa_function* f, double x, double* out) {
    OSA_REQUIRE(f);
    OSA_REQUIRE(out);
    return guarded([&] { *out = f->model(in_unit(x)); });
}

osa_status osa_function_derivative(const osa_function* f, double x, double* out) {
    OSA_REQUIRE(f);
    OSA_REQUIRE(out);
    return guarded([&] { *out = f->model.derivative(in_unit(x)); });
}

const char* osa_function_id(const osa_function* f) { return f ? f->model.id().c_str() : ""; }

osa_status osa_function_builtin_ids(char** out) {
    OSA_REQUIRE(out);
    return guarded([&] {
        std::string all;
        for (const std::string& id : builtin_function_ids()) all += id + "\n";
        *out = copy_string(all);
    });
}

void osa_function_free(osa_function* f) { delete f; }

void osa_quad_config_default(osa_quad_config* cfg) {
    if (!cfg) return;
    const QuadConfig q;
    *cfg = osa_quad_config{q.panels, q.nodes, q.singular_offset};
}

osa_status osa_space_create(double p, const char* weight_id, const osa_quad_config* quad,
                            osa_space** out) {
    OSA_REQUIRE(weight_id);
    OSA_REQUIRE(out);
    return guarded([&] { *out = new osa_space{builtin_space(weight_id, p, to_quad(quad))}; });
}

osa_status osa_space_create_expr(double p, const char* weight_expr, const osa_quad_config* quad,
                                 osa_space** out) {
    OSA_REQUIRE(weight_expr);
    OSA_REQUIRE(out);
    return guarded([&] {
        *out = new osa_space{WeightedSpace(p, compile_expression(weight_expr), to_quad(quad),
                                           std::string("expr:") + weight_expr)};
    });
}

void osa_space_free(osa_space* s) { delete s; }

osa_status osa_weighted_norm(const osa_function* f, const osa_space* s, double* out) {
    OSA_REQUIRE(f);
    OSA_REQUIRE(s);
    OSA_REQUIRE(out);
    return guarded([&] { *out = weighted_norm(f->model, s->space); });
}

void osa_modulus_config_default(osa_modulus_config* cfg) {
    if (!cfg) return;
    const ModulusConfig m;
    *cfg = osa_modulus_config{m.k, m.window_samples, m.step_samples};
}

osa_status osa_local_modulus(const osa_function* f, double x, double delta,
                             const osa_modulus_config* cfg, double* out) {
    OSA_REQUIRE(f);
    OSA_REQUIRE(out);
    return guarded([&] { *out = local_modulus(f->model, x, delta, to_modulus(cfg)); });
}

osa_status osa_averaged_modulus(const osa_function* f, double delta, const osa_modulus_config* cfg,
                                const osa_space* s, double* out) {
    OSA_REQUIRE(f);
    OSA_REQUIRE(s);
    OSA_REQUIRE(out);
    return guarded([&] { *out = averaged_modulus(f->model, delta, to_modulus(cfg), s->space); });
}

osa_status osa_poly_eval(const osa_poly* p, double x, double* out) {
    OSA_REQUIRE(p);
    OSA_REQUIRE(out);
    return guarded([&] { *out = p->poly(x); });
}

int osa_poly_degree(const osa_poly* p) { return p ? p->poly.degree() : -1; }

osa_status osa_poly_coeffs(const osa_poly* p, double* buf, size_t cap, size_t* len) {
    OSA_REQUIRE(p);
    OSA_REQUIRE(len);
    const std::span<const double> c = p->poly.coeffs();
    *len = c.size();
    if (cap < c.size()) return fail(OSA_ERR_ARGUMENT, "coefficient buffer too small");
    OSA_REQUIRE(buf);
    std::copy(c.begin(), c.end(), buf);
    return OSA_OK;
}

osa_status osa_poly_domain(const osa_poly* p, double* lo, double* hi) {
    OSA_REQUIRE(p);
    OSA_REQUIRE(lo);
    OSA_REQUIRE(hi);
    *lo = p->poly.domain().lo;
    *hi = p->poly.domain().hi;
    return OSA_OK;
}

void osa_poly_free(osa_poly* p) { delete p; }

osa_status osa_step_sandwich_build(int k, int reflected, osa_sandwich** out) {
    OSA_REQUIRE(out);
    return guarded([&] {
        if (k < 0) throw ArgumentError("sandwich degree must be >= 0");
        *out = new osa_sandwich{reflected ? cached_reflected_sandwich(k) : cached_step_sandwich(k)};
    });
}

osa_status osa_step_sandwich_gap(const osa_sandwich* s, double* gap) {
    OSA_REQUIRE(s);
    OSA_REQUIRE(gap);
    *gap = s->pair.gap;
    return OSA_OK;
}

osa_status osa_step_sandwich_eval(const osa_sandwich* s, double u, double* lower, double* upper) {
    OSA_REQUIRE(s);
    return guarded([&] {
        const double lo = s->pair.lower(u);
        const double hi = s->pair.upper(u);
        if (lower) *lower = lo;
        if (upper) *upper = hi;
    });
}

osa_status osa_step_sandwich_polys(const osa_sandwich* s, osa_poly** lower, osa_poly** upper) {
    OSA_REQUIRE(s);
    return guarded([&] {
        emit(s->pair.lower, lower);
        emit(s->pair.upper, upper);
    });
}

void osa_step_sandwich_free(osa_sandwich* s) { delete s; }

osa_status osa_smooth_eval(const osa_function* f, double y, int upper, double x, double* value,
                           double* derivative) {
    OSA_REQUIRE(f);
    return guarded([&] {
        const Smoother sm = upper ? smooth_upper_H(f->model, y) : smooth_lower_G(f->model, y);
        if (value) *value = sm(x);
        if (derivative) *derivative = sm.derivative(x);
    });
}

osa_status osa_kernel_operators(const osa_function* f, int k, osa_poly** lower, osa_poly** upper) {
    OSA_REQUIRE(f);
    return guarded([&] {
        if (k < 0) throw ArgumentError("degree k must be >= 0");
        const SandwichPair& pair = cached_reflected_sandwich(k);
        std::unique_ptr<osa_poly> lo, hi;
        if (lower) lo.reset(new osa_poly{materialize_M(f->model, pair).poly});
        if (upper) hi.reset(new osa_poly{materialize_N(f->model, pair).poly});
        if (lower) *lower = lo.release();
        if (upper) *upper = hi.release();
    });
}

osa_status osa_approximate(const osa_function* f, int k, double y, osa_poly** lower, osa_poly** upper) {
    OSA_REQUIRE(f);
    return guarded([&] {
        if (k < 0) throw ArgumentError("degree k must be >= 0");
        std::unique_ptr<osa_poly> lo, hi;
        if (y <= 0.0) {
            const AutoPair ab = auto_pair_AB(f->model, k);
            lo.reset(new osa_poly{ab.lower.poly});
            hi.reset(new osa_poly{ab.upper.poly});
        } else {
            lo.reset(new osa_poly{composite_lower_L(f->model, k, y).poly});
            hi.reset(new osa_poly{composite_upper_J(f->model, k, y).poly});
        }
        if (lower) *lower = lo.release();
        if (upper) *upper = hi.release();
    });
}

osa_status osa_oracle(const osa_function* f, int k, const osa_space* s, int grid_n, int two_sided,
                      double* value, osa_poly** lower, osa_poly** upper) {
    OSA_REQUIRE(f);
    OSA_REQUIRE(s);
    return guarded([&] {
        const OracleResult r = two_sided ? best_twosided(f->model, k, s->space, grid_n)
                                         : best_onesided(f->model, k, s->space, grid_n);
        if (value) *value = r.value;
        emit(r.lower, lower);
        if (upper) *upper = r.upper ? new osa_poly{*r.upper} : nullptr;
    });
}

osa_status osa_verify_default_suite(const int* ks, size_t nk, double p, osa_report_list** out) {
    OSA_REQUIRE(out);
    if (nk > 0) OSA_REQUIRE(ks);
    return guarded([&] {
        auto list = std::make_unique<osa_report_list>();
        list->reports = run_theorem_suite(default_suite(), std::span<const int>(ks, nk), p);
        *out = list.release();
    });
}

osa_status osa_verify_suite(const osa_function* const* fns, size_t nf, const int* ks, size_t nk,
                            const osa_space* s, osa_report_list** out) {
    OSA_REQUIRE(s);
    OSA_REQUIRE(out);
    if (nf > 0) OSA_REQUIRE(fns);
    if (nk > 0) OSA_REQUIRE(ks);
    return guarded([&] {
        std::vector<FunctionModel> models;
        for (size_t i = 0; i < nf; ++i) {
            if (!fns[i]) throw ArgumentError("null function in suite");
            models.push_back(fns[i]->model);
        }
        auto list = std::make_unique<osa_report_list>();
        list->reports = run_theorem_suite(models, std::span<const int>(ks, nk), s->space);
        *out = list.release();
    });
}

size_t osa_report_count(const osa_report_list* list) { return list ? list->reports.size() : 0; }

osa_status osa_report_get(const osa_report_list* list, size_t i, osa_report* out) {
    OSA_REQUIRE(list);
    OSA_REQUIRE(out);
    if (i >= list->reports.size()) return fail(OSA_ERR_ARGUMENT, "report index out of range");
    const VerificationReport& r = list->reports[i];
    auto* self = const_cast<osa_report_list*>(list);
    if (self->kinds.size() != list->reports.size()) {
        self->kinds.clear();
        for (const VerificationReport& each : list->reports) self->kinds.push_back(to_string(each.kind));
    }
    *out = osa_report{r.check_id.c_str(), r.function_id.c_str(), r.weight_id.c_str(),
                      list->kinds[i].c_str(), r.params.k,  r.params.y,
                      r.params.p,           r.lhs,       r.rhs,
                      r.ratio,              r.min_margin, r.pass ? 1 : 0,
                      r.grid_n,             r.error.c_str()};
    return OSA_OK;
}

void osa_report_summary(const osa_report_list* list, int* total, int* passed, int* failed) {
    SuiteSummary s;
    if (list) s = summarize(list->reports);
    if (total) *total = s.total;
    if (passed) *passed = s.passed;
    if (failed) *failed = s.failed;
}

osa_status osa_reports_to_csv(const osa_report_list* list, char** out) {
    OSA_REQUIRE(list);
    OSA_REQUIRE(out);
    return guarded([&] { *out = copy_string(reports_to_csv(list->reports)); });
}

osa_status osa_reports_to_json(const osa_report_list* list, char** out) {
    OSA_REQUIRE(list);
    OSA_REQUIRE(out);
    return guarded([&] { *out = copy_string(reports_to_json(list->reports)); });
}

void osa_report_list_free(osa_report_list* list) { delete list; }

}  // extern "C"
