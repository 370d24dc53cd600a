/* bazlab — workbench for Bazilevic-type function classes on the unit disk.
 *
 * C API over the C++ core: opaque handles, status codes, UTF-8 JSON strings.
 * Every function returning bzl_status leaves a diagnostic readable through
 * bzl_last_error() / bzl_last_error_kind() on failure (thread-local).
 * Strings returned through char** are owned by the caller; release them with
 * bzl_string_free(). Handles are released with the matching *_free().
 */
#ifndef BAZLAB_H
#define BAZLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as CLI exit codes: 2 = validation problem,
 * 3 = a proven theorem failed numerically (an implementation bug),
 * 4 = a conjecture counterexample was recorded (a finding, not an error). */
typedef enum bzl_status {
    BZL_OK = 0,
    BZL_ERR_INTERNAL = 1,
    BZL_ERR_INVALID = 2,
    BZL_ERR_THEOREM_VIOLATION = 3,
    BZL_FINDING = 4
} bzl_status;

typedef enum bzl_error_kind {
    BZL_KIND_NONE = 0,
    BZL_KIND_INVALID_ARGUMENT,
    BZL_KIND_PARSE_ERROR,
    BZL_KIND_ZERO_CONSTANT_TERM,
    BZL_KIND_NON_UNIT_CONSTANT_TERM,
    BZL_KIND_NONZERO_INNER_CONSTANT,
    BZL_KIND_RADIUS_OUT_OF_RANGE,
    BZL_KIND_INVALID_MEASURE,
    BZL_KIND_INVALID_JANOWSKI,
    BZL_KIND_OMEGA_NOT_SCHWARZ,
    BZL_KIND_BETA_UNSUPPORTED,
    BZL_KIND_SPEC_INVALID,
    BZL_KIND_DIVISION_BY_VANISHING,
    BZL_KIND_ALPHA_MISMATCH,
    BZL_KIND_NORMALIZATION_ERROR,
    BZL_KIND_LENGTH_MISMATCH,
    BZL_KIND_ALPHA_OUT_OF_RANGE,
    BZL_KIND_TRUNCATION_INSUFFICIENT,
    BZL_KIND_INTERNAL
} bzl_error_kind;

const char* bzl_version(void);
const char* bzl_last_error(void);
bzl_error_kind bzl_last_error_kind(void);
void bzl_string_free(char* s);

/* ---- truncated Taylor series -------------------------------------- */

typedef struct bzl_series bzl_series;

/* reim: interleaved re,im pairs; count = number of coefficients (order+1). */
bzl_status bzl_series_create(const double* reim, int32_t count, bzl_series** out);
/* JSON array of [re, im] pairs, index = degree; exact round-trip. */
bzl_status bzl_series_from_json(const char* json, bzl_series** out);
bzl_status bzl_series_to_json(const bzl_series* s, char** out);
int32_t bzl_series_order(const bzl_series* s);
bzl_status bzl_series_coeff(const bzl_series* s, int32_t degree, double* re, double* im);
bzl_status bzl_series_eval(const bzl_series* s, double re, double im,
                           double* out_re, double* out_im);
void bzl_series_free(bzl_series* s);

bzl_status bzl_series_add(const bzl_series* a, const bzl_series* b, bzl_series** out);
bzl_status bzl_series_mul(const bzl_series* a, const bzl_series* b, bzl_series** out);
bzl_status bzl_series_div(const bzl_series* a, const bzl_series* b, bzl_series** out);
bzl_status bzl_series_deriv(const bzl_series* a, bzl_series** out);
bzl_status bzl_series_antideriv(const bzl_series* a, bzl_series** out);
bzl_status bzl_series_pow_real(const bzl_series* a, double t, bzl_series** out);
bzl_status bzl_series_compose(const bzl_series* outer, const bzl_series* inner,
                              bzl_series** out);

/* ---- ingredient classes -------------------------------------------- */

/* measure_json: {"atoms":[{"t":angle,"lam":weight},...]}, weights sum to 1. */
bzl_status bzl_caratheodory(const char* measure_json, int32_t order, bzl_series** out);
bzl_status bzl_janowski_phi(double A, double B, int32_t order, bzl_series** out);
/* omega_json: {"kind":"z"|"power"|"blaschke"|"series", ...}; returns g/z. */
bzl_status bzl_starlike_janowski(double A, double B, const char* omega_json,
                                 int32_t order, bzl_series** out);
bzl_status bzl_koebe_type(double theta, int32_t order, bzl_series** out);

/* ---- constructed members ------------------------------------------- */

typedef struct bzl_bazfn bzl_bazfn;

/* spec_json: {"alphas":[...], "beta":0, "factors":[...], "h":..., "N":int}. */
bzl_status bzl_bazfn_construct(const char* spec_json, int32_t order_override,
                               bzl_bazfn** out);
double bzl_bazfn_alpha(const bzl_bazfn* f);
bzl_status bzl_bazfn_unit_series(const bzl_bazfn* f, bzl_series** out); /* f/z */
bzl_status bzl_bazfn_series(const bzl_bazfn* f, bzl_series** out);      /* f   */
void bzl_bazfn_free(bzl_bazfn* f);

bzl_status bzl_p_operator(const bzl_bazfn* f, double alpha, bzl_series** out);
bzl_status bzl_necessary_condition(const bzl_bazfn* f, double alpha, double r,
                                   double theta1, double theta2, int32_t K,
                                   double* value);
bzl_status bzl_to_ci(const bzl_bazfn* g, double alpha, bzl_series** out);
bzl_status bzl_from_ci(const bzl_series* F, double beta, bzl_bazfn** out);

/* ---- report runs (JSON out; status carries the verdict) ------------- */

bzl_status bzl_report_construct(const char* spec_json, int32_t order_override, char** out);
bzl_status bzl_report_coeffs(const char* spec_json, int32_t order_override, char** out);
/* spec_json NULL: report on the extremal comparison function for alpha. */
bzl_status bzl_report_bounds(const char* spec_json, double alpha, int32_t order, char** out);
bzl_status bzl_report_sweep(int32_t which, double alpha, int32_t trials, uint64_t seed,
                            int32_t order, char** out);
/* p may be INFINITY. target: {"series":[...]}|{"koebe":{"theta":t}}|spec. */
bzl_status bzl_report_means(const char* target_json, double p, const double* radii,
                            int32_t n_radii, int32_t order_override, int32_t K, char** out);
/* radii NULL: default scan grid {0.5, 0.9, 0.99, 0.999}. */
bzl_status bzl_report_necessary_scan(const char* spec_json, const double* radii,
                                     int32_t n_radii, int32_t order_override, int32_t K,
                                     char** out);
bzl_status bzl_report_necessary_single(const char* spec_json, double r, double theta1,
                                       double theta2, int32_t order_override, int32_t K,
                                       char** out);
/* alpha <= 0: use the alpha the spec constructs with. */
bzl_status bzl_report_correspond(const char* spec_json, double alpha,
                                 int32_t order_override, char** out);
bzl_status bzl_report_koebe_witness(double theta, const double* radii, int32_t n_radii,
                                    int32_t order, int32_t K, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BAZLAB_H */
