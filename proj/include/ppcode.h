/* C interface to the parameterized-code analysis library.
 *
 * All functions return a ppcode_status; results come back through out
 * parameters. Handles are opaque and must be released with the matching
 * _free function. On any failure ppcode_last_error() returns a
 * thread-local message describing what went wrong.
 */
#ifndef PPCODE_H
#define PPCODE_H

#include <stdint.h>

#ifndef PPCODE_API
#if defined(__GNUC__) || defined(__clang__)
#define PPCODE_API __attribute__((visibility("default")))
#else
#define PPCODE_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppcode_status {
  PPCODE_OK = 0,
  PPCODE_ERROR_INPUT = 2,    /* malformed or out-of-range input */
  PPCODE_ERROR_INTERNAL = 3, /* invariant violation; report a bug */
  PPCODE_ERROR_BUDGET = 4    /* computation exceeded its work budget */
} ppcode_status;

typedef struct ppcode_analysis ppcode_analysis;

typedef struct ppcode_options {
  /* Largest degree in the table; -1 picks the default (m-1)(q-2)-1. */
  int64_t d_max;
  /* Work budget for exact minimum distances; 0 skips them. */
  uint64_t exact_budget;
  /* Nonzero reports ceil of the fractional lower bound instead of floor. */
  int delta_ceil;
} ppcode_options;

/* Fills opts with the defaults above. */
PPCODE_API void ppcode_options_init(ppcode_options* opts);

/* Analyzes a JSON input. kind is "matrix", "graph" or "clutter"; a matrix
 * input is {"q": ..., "matrix": [[...]]}, an edge input is {"q": ...,
 * "vertices": n, "edges": [[...]]}; both take an optional "name".
 * opts may be NULL for defaults. On success *out owns the result. */
PPCODE_API ppcode_status ppcode_analyze_text(const char* text, const char* kind,
                                  const ppcode_options* opts, ppcode_analysis** out);
PPCODE_API ppcode_status ppcode_analyze_file(const char* path, const char* kind,
                                  const ppcode_options* opts, ppcode_analysis** out);

PPCODE_API void ppcode_analysis_free(ppcode_analysis* a);

/* Renders the analysis as "table", "csv" or "json". *out is a NUL-terminated
 * string owned by the caller; release it with ppcode_string_free. */
PPCODE_API ppcode_status ppcode_analysis_render(const ppcode_analysis* a, const char* format,
                                     char** out);
PPCODE_API void ppcode_string_free(char* s);

/* Scalar results. */
PPCODE_API int64_t ppcode_analysis_length(const ppcode_analysis* a);      /* |X| */
PPCODE_API int64_t ppcode_analysis_kernel_size(const ppcode_analysis* a); /* |M| */
PPCODE_API int64_t ppcode_analysis_regularity(const ppcode_analysis* a);  /* r_X */
PPCODE_API int64_t ppcode_analysis_row_count(const ppcode_analysis* a);

/* One degree row; absent quantities are reported through the has_ flags. */
typedef struct ppcode_row {
  int64_t d;
  int64_t h_x;    /* dimension of the degree-d code */
  int64_t h_t;    /* ambient torus dimension */
  int64_t h_bar;  /* h_t - h_x */
  int64_t singleton;
  int has_delta_lower;
  int64_t delta_lower;
  int has_delta_upper;
  int64_t delta_upper;
  int has_delta_exact;
  int64_t delta_exact;
  int delta_exact_is_exact; /* 0 = sampled upper bound */
} ppcode_row;

PPCODE_API ppcode_status ppcode_analysis_row(const ppcode_analysis* a, int64_t index,
                                  ppcode_row* out);

/* Runs the built-in worked examples against their frozen tables. Returns
 * PPCODE_OK when every value matches; otherwise PPCODE_ERROR_INTERNAL with
 * the mismatches listed in *report (owned by the caller, may be NULL). */
PPCODE_API ppcode_status ppcode_fixtures_run(char** report);

/* Message for the most recent failure on this thread; never NULL. */
PPCODE_API const char* ppcode_last_error(void);

PPCODE_API const char* ppcode_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PPCODE_H */
