/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ONESIDED_ONESIDED_H
#define ONESIDED_ONESIDED_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ONESIDED_BUILDING)
#    define OSA_API __declspec(dllexport)
#  else
#    define OSA_API __declspec(dllimport)
#  endif
#else
#  define OSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure osa_last_error() holds a
 * message for the calling thread until its next failing call. */
typedef enum osa_status {
    OSA_OK = 0,
    OSA_ERR_DOMAIN = 1,
    OSA_ERR_ARGUMENT = 2,
    OSA_ERR_EVALUATION = 3,
    OSA_ERR_CONFIG = 4,
    OSA_ERR_UNSUPPORTED = 5,
    OSA_ERR_INTERNAL = 6,
    OSA_ERR_NOT_FOUND = 7,
    OSA_ERR_PARSE = 8
} osa_status;

typedef struct osa_function osa_function;
typedef struct osa_space osa_space;
typedef struct osa_sandwich osa_sandwich;
typedef struct osa_poly osa_poly;
typedef struct osa_report_list osa_report_list;

OSA_API const char* osa_version(void);
OSA_API const char* osa_last_error(void);
OSA_API const char* osa_status_name(osa_status status);
/* Frees strings returned through char** out-parameters. */
OSA_API void osa_string_free(char* s);

/* ---- functions on X = [0, 1] ------------------------------------------ */

/* Built-in ids: constant identity neg_identity square abs_shift sin10 exp
 * ramp inv_quarter. Unknown id -> OSA_ERR_NOT_FOUND. */
OSA_API osa_status osa_function_from_id(const char* id, osa_function** out);
/* Expression in x; non-zero flags mark a pole at 0 and/or 1. */
OSA_API osa_status osa_function_from_expr(const char* expr, int singular_left, int singular_right,
                                          osa_function** out);
OSA_API osa_status osa_function_eval(const osa_function* f, double x, double* out);
OSA_API osa_status osa_function_derivative(const osa_function* f, double x, double* out);
OSA_API const char* osa_function_id(const osa_function* f);
/* Newline-separated list of built-in ids (free with osa_string_free). */
OSA_API osa_status osa_function_builtin_ids(char** out);
OSA_API void osa_function_free(osa_function* f);

/* ---- weighted spaces -------------------------------------------------- */

typedef struct osa_quad_config {
    int panels;
    int nodes;
    double singular_offset;
} osa_quad_config;

OSA_API void osa_quad_config_default(osa_quad_config* cfg);

/* weight_id: "one" or "inv_sqrt". quad may be NULL for defaults. */
OSA_API osa_status osa_space_create(double p, const char* weight_id, const osa_quad_config* quad,
                                    osa_space** out);
OSA_API osa_status osa_space_create_expr(double p, const char* weight_expr,
                                         const osa_quad_config* quad, osa_space** out);
OSA_API void osa_space_free(osa_space* s);

OSA_API osa_status osa_weighted_norm(const osa_function* f, const osa_space* s, double* out);

/* ---- moduli ----------------------------------------------------------- */

typedef struct osa_modulus_config {
    int k;
    int window_samples;
    int step_samples;
} osa_modulus_config;

OSA_API void osa_modulus_config_default(osa_modulus_config* cfg);
OSA_API osa_status osa_local_modulus(const osa_function* f, double x, double delta,
                                     const osa_modulus_config* cfg, double* out);
OSA_API osa_status osa_averaged_modulus(const osa_function* f, double delta,
                                        const osa_modulus_config* cfg, const osa_space* s,
                                        double* out);

/* ---- polynomials ------------------------------------------------------ */

OSA_API osa_status osa_poly_eval(const osa_poly* p, double x, double* out);
OSA_API int osa_poly_degree(const osa_poly* p);
/* Chebyshev coefficients; *len receives degree + 1 even when cap is short. */
OSA_API osa_status osa_poly_coeffs(const osa_poly* p, double* buf, size_t cap, size_t* len);
OSA_API osa_status osa_poly_domain(const osa_poly* p, double* lo, double* hi);
OSA_API void osa_poly_free(osa_poly* p);

/* ---- step-function sandwich ------------------------------------------- */

/* Certified pair around the step on [-1, 1] (reflected != 0: around 1 - step). */
OSA_API osa_status osa_step_sandwich_build(int k, int reflected, osa_sandwich** out);
OSA_API osa_status osa_step_sandwich_gap(const osa_sandwich* s, double* gap);
OSA_API osa_status osa_step_sandwich_eval(const osa_sandwich* s, double u, double* lower,
                                          double* upper);
OSA_API osa_status osa_step_sandwich_polys(const osa_sandwich* s, osa_poly** lower,
                                           osa_poly** upper);
OSA_API void osa_step_sandwich_free(osa_sandwich* s);

/* ---- operators -------------------------------------------------------- */

/* Smoothed value and derivative of G_y (upper == 0) or H_y at x. */
OSA_API osa_status osa_smooth_eval(const osa_function* f, double y, int upper, double x,
                                   double* value, double* derivative);
/* M_k and N_k of an absolutely continuous function. */
OSA_API osa_status osa_kernel_operators(const osa_function* f, int k, osa_poly** lower,
                                        osa_poly** upper);
/* L_{k,y} and J_{k,y}; y <= 0 selects y = 1/k, i.e. A_k and B_k. */
OSA_API osa_status osa_approximate(const osa_function* f, int k, double y, osa_poly** lower,
                                   osa_poly** upper);

/* ---- oracle ----------------------------------------------------------- */

/* Grid LP on grid_n Chebyshev nodes (p must be 1). For two_sided the upper
 * output is left NULL; lower and upper may be NULL when not wanted. */
OSA_API osa_status osa_oracle(const osa_function* f, int k, const osa_space* s, int grid_n,
                              int two_sided, double* value, osa_poly** lower, osa_poly** upper);

/* ---- verification ----------------------------------------------------- */

typedef struct osa_report {
    const char* check_id;
    const char* function_id;
    const char* weight_id;
    const char* kind;
    int k;
    double y;
    double p;
    double lhs;
    double rhs;
    double ratio;
    double min_margin;
    int pass;
    int grid_n;
    const char* error; /* empty string when none */
} osa_report;

/* Default six-member suite at exponent p over the given degrees. */
OSA_API osa_status osa_verify_default_suite(const int* ks, size_t nk, double p,
                                            osa_report_list** out);
OSA_API osa_status osa_verify_suite(const osa_function* const* fns, size_t nf, const int* ks,
                                    size_t nk, const osa_space* s, osa_report_list** out);
OSA_API size_t osa_report_count(const osa_report_list* list);
/* String fields stay valid while the list lives. */
OSA_API osa_status osa_report_get(const osa_report_list* list, size_t i, osa_report* out);
OSA_API void osa_report_summary(const osa_report_list* list, int* total, int* passed,
                                int* failed);
OSA_API osa_status osa_reports_to_csv(const osa_report_list* list, char** out);
OSA_API osa_status osa_reports_to_json(const osa_report_list* list, char** out);
OSA_API void osa_report_list_free(osa_report_list* list);

#ifdef __cplusplus
}
#endif

#endif
