#ifndef LIOUVILLE_H
#define LIOUVILLE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LIOUVILLE_BUILDING)
#define LV_API __attribute__((visibility("default")))
#else
#define LV_API
#endif

typedef struct lv_context lv_context;
typedef struct lv_report lv_report;

typedef enum {
    LV_OK = 0,
    LV_ERR_ARGUMENT = 1,   /* invalid or out-of-range input */
    LV_ERR_DOMAIN = 2,     /* mathematical precondition failed */
    LV_ERR_INTERNAL = 3,
} lv_status;

/* Outcome of a finished report; equals the CLI exit code. */
typedef enum {
    LV_PASS = 0,
    LV_VIOLATED = 1,
    LV_INCONCLUSIVE = 2,
} lv_outcome;

typedef enum {
    LV_LAB_DOUBLE = 0,
    LV_LAB_EXTENDED = 1,
    LV_LAB_EXACT = 2,
} lv_lab_precision;

LV_API const char* lv_version(void);

LV_API lv_context* lv_context_new(void);
LV_API void lv_context_free(lv_context* ctx);
/* Message of the last failed call on this context ("" when none). */
LV_API const char* lv_last_error(const lv_context* ctx);

LV_API lv_status lv_set_precision(lv_context* ctx, unsigned bits);
LV_API lv_status lv_set_seed(lv_context* ctx, uint64_t seed);
LV_API lv_status lv_set_threads(lv_context* ctx, int threads);

/* Rationals are passed as "a/b" or exact decimal strings; NULL p means the critical exponent. */
LV_API lv_status lv_claims(lv_context* ctx, int n_max, lv_report** out);
LV_API lv_status lv_thresholds(lv_context* ctx, int n_lo, int n_hi, const char* p, int p_points, lv_report** out);
LV_API lv_status lv_identities(lv_context* ctx, long trials, lv_lab_precision precision, const int* dims,
                               int dim_count, lv_report** out);
LV_API lv_status lv_young(lv_context* ctx, int n_lo, int n_hi, int p_points, lv_report** out);
/* NULL q means q = 2p/(p+1). */
LV_API lv_status lv_shoot(lv_context* ctx, int n, const char* p, const char* q, double M, double a, double r_max,
                          double tol, lv_report** out);
LV_API lv_status lv_sweep(lv_context* ctx, int n, const char* p, double M, double h_lo, double h_hi, int count,
                          double r_max, lv_report** out);
LV_API lv_status lv_full_report(lv_context* ctx, lv_report** out);

/* Strings stay valid until the report is freed. */
LV_API const char* lv_report_json(const lv_report* r);
LV_API const char* lv_report_csv(const lv_report* r);
LV_API const char* lv_report_text(const lv_report* r);
LV_API lv_outcome lv_report_outcome(const lv_report* r);
LV_API void lv_report_free(lv_report* r);

#ifdef __cplusplus
}
#endif

#endif
