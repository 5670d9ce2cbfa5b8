/*
 * kodaira -- exact verifier for characteristic-p failures of Kodaira
 * vanishing on projectivized Frobenius pull-back bundles over the
 * point-hyperplane incidence variety.
 *
 * C interface of the shared library. All objects are opaque handles owned by
 * the library; every function that can fail returns a kodaira_status and
 * leaves a human-readable message in kodaira_last_error(). Strings returned
 * by accessors stay valid until the owning handle is freed.
 */

#ifndef KODAIRA_H
#define KODAIRA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KODAIRA_API __declspec(dllexport)
#else
#define KODAIRA_API __attribute__((visibility("default")))
#endif

typedef enum kodaira_status {
  KODAIRA_OK = 0,
  KODAIRA_ERR_INVALID_INPUT = 1,  /* bad n, p, degree, or malformed data   */
  KODAIRA_ERR_BUDGET = 2,         /* projected matrix exceeds the budget   */
  KODAIRA_ERR_CHECK_FAILED = 3,   /* internal cross-check failed (a bug)   */
  KODAIRA_ERR_IO = 4,             /* file could not be written or read     */
  KODAIRA_ERR_INTERNAL = 5
} kodaira_status;

typedef struct kodaira_report kodaira_report;
typedef struct kodaira_sweep kodaira_sweep;
typedef struct kodaira_table kodaira_table;

KODAIRA_API const char *kodaira_version(void);

/* Message for the most recent failure on this thread; never NULL. */
KODAIRA_API const char *kodaira_last_error(void);

/* ------------------------------------------------------------------ */
/* Verification of one pair (n, p).                                    */
/*                                                                     */
/* budget_entries caps the projected rows*cols of the assembled matrix */
/* (0 selects the default of 4e11). allow_small_p admits exploratory   */
/* runs with p < n-1, where the geometric conclusion is not claimed.   */
/* ------------------------------------------------------------------ */
KODAIRA_API kodaira_status kodaira_verify(int n, long long p,
                                          long long budget_entries,
                                          int allow_small_p,
                                          kodaira_report **out);
KODAIRA_API void kodaira_report_free(kodaira_report *report);

KODAIRA_API int kodaira_report_n(const kodaira_report *report);
KODAIRA_API long long kodaira_report_p(const kodaira_report *report);
KODAIRA_API int kodaira_report_dim_x(const kodaira_report *report);
KODAIRA_API long long kodaira_report_rows(const kodaira_report *report);
KODAIRA_API long long kodaira_report_cols(const kodaira_report *report);
KODAIRA_API long long kodaira_report_rank(const kodaira_report *report);
KODAIRA_API long long kodaira_report_corank(const kodaira_report *report);
KODAIRA_API long long kodaira_report_kernel(const kodaira_report *report);

/* dim H^i(X, L^{-1}); zero for absent degrees. */
KODAIRA_API long long kodaira_report_h(const kodaira_report *report, int i);

/* 1 = in image, 0 = not in image, -1 = not checked (exploratory run). */
KODAIRA_API int kodaira_report_witness_in_image(const kodaira_report *report);
KODAIRA_API const char *kodaira_report_witness_monomial(const kodaira_report *report);

KODAIRA_API int kodaira_report_check_count(const kodaira_report *report);
KODAIRA_API const char *kodaira_report_check_name(const kodaira_report *report, int idx);
KODAIRA_API int kodaira_report_check_passed(const kodaira_report *report, int idx);
KODAIRA_API int kodaira_report_warning_count(const kodaira_report *report);
KODAIRA_API const char *kodaira_report_warning(const kodaira_report *report, int idx);

/* Stable renderings: JSON object, human-readable text, CSV (header + row). */
KODAIRA_API const char *kodaira_report_json(const kodaira_report *report);
KODAIRA_API const char *kodaira_report_text(const kodaira_report *report);
KODAIRA_API const char *kodaira_report_csv(const kodaira_report *report);

/* ------------------------------------------------------------------ */
/* Sweep over a rectangle of pairs, n then p ascending. Pairs with     */
/* p < n-1 are skipped with a recorded reason.                         */
/* ------------------------------------------------------------------ */
KODAIRA_API kodaira_status kodaira_sweep_run(int n_min, int n_max, long long p_min,
                                             long long p_max, long long budget_entries,
                                             kodaira_sweep **out);
KODAIRA_API void kodaira_sweep_free(kodaira_sweep *sweep);
KODAIRA_API size_t kodaira_sweep_report_count(const kodaira_sweep *sweep);
KODAIRA_API const kodaira_report *kodaira_sweep_report(const kodaira_sweep *sweep,
                                                       size_t idx);
KODAIRA_API size_t kodaira_sweep_skipped_count(const kodaira_sweep *sweep);
KODAIRA_API const char *kodaira_sweep_json(const kodaira_sweep *sweep);
KODAIRA_API const char *kodaira_sweep_text(const kodaira_sweep *sweep);
KODAIRA_API const char *kodaira_sweep_csv(const kodaira_sweep *sweep);

/* ------------------------------------------------------------------ */
/* Cohomology dimension tables.                                        */
/*                                                                     */
/* kodaira_table_dim returns the exact dimension, 0 for vanishing      */
/* degrees and -1 where the long exact sequence leaves the value       */
/* indeterminate.                                                      */
/* ------------------------------------------------------------------ */
KODAIRA_API kodaira_status kodaira_cohomology_y(int n, long long a, long long b,
                                                kodaira_table **out);
KODAIRA_API kodaira_status kodaira_cohomology_product(int n, long long a, long long b,
                                                      kodaira_table **out);
KODAIRA_API kodaira_status kodaira_cohomology_pn(int n, long long d,
                                                 kodaira_table **out);
KODAIRA_API void kodaira_table_free(kodaira_table *table);
KODAIRA_API int kodaira_table_top_degree(const kodaira_table *table);
KODAIRA_API long long kodaira_table_dim(const kodaira_table *table, int j);
KODAIRA_API const char *kodaira_table_json(const kodaira_table *table);
KODAIRA_API const char *kodaira_table_text(const kodaira_table *table);
KODAIRA_API const char *kodaira_table_csv(const kodaira_table *table);

/* ------------------------------------------------------------------ */
/* Matrix dump: writes `path` in the triple format "rows cols p" +     */
/* "row col value" lines sorted column-major, plus `path.rows` and     */
/* `path.cols` sidecars mapping indices to monomials.                  */
/* ------------------------------------------------------------------ */
KODAIRA_API kodaira_status kodaira_dump_matrix(int n, long long p, const char *path,
                                               long long budget_entries,
                                               int allow_small_p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KODAIRA_H */
