/* weylcert: C API for the exact verification engine.
 *
 * All functions are thread-compatible: distinct engines may be used from
 * distinct threads concurrently; a single engine must not be shared without
 * external synchronization (it stores the last error message).
 *
 * Strings returned through out-parameters are heap-allocated; release them
 * with wc_string_free.
 */
#ifndef WEYLCERT_H
#define WEYLCERT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wc_engine wc_engine;

typedef enum {
  WC_OK = 0,
  WC_ERR_INVALID_ARGUMENT = 1, /* unknown suite, bad parameters, null pointers */
  WC_ERR_ARITHMETIC = 2,       /* violated arithmetic precondition */
  WC_ERR_PARSE = 3,            /* expression syntax error */
  WC_ERR_VERIFICATION_FAILED = 4, /* suite ran to completion with verdict fail */
  WC_ERR_UNKNOWN = 5
} wc_status;

typedef struct {
  long p;          /* odd prime, default 3 */
  unsigned n;      /* number of generator pairs, default 1 */
  long c;          /* first twist parameter, default 1 */
  long cprime;     /* second twist parameter, default 1 */
  unsigned seed;   /* seed for randomized property checks, default 0 */
} wc_suite_params;

/* Library version string (static storage; do not free). */
const char* wc_version(void);

wc_engine* wc_engine_create(void);
void wc_engine_destroy(wc_engine* e);

/* Message of the last failed call on this engine (static storage bound to
 * the engine; valid until the next call). Empty string when no error. */
const char* wc_last_error(const wc_engine* e);

/* JSON array of the available suite names. */
wc_status wc_suite_list(wc_engine* e, char** names_json);

/* Runs a named verification suite.  On WC_OK and on
 * WC_ERR_VERIFICATION_FAILED *report_json receives the JSON report; any
 * other status leaves it untouched.  Pass with_timings = 0 for byte-exact
 * reproducible output. */
wc_status wc_run_suite(wc_engine* e, const char* suite, const wc_suite_params* params,
                       int with_timings, char** report_json);

/* Parses and evaluates an expression in the Weyl algebra with parameters
 * (p, n); when tensor is nonzero the y-generators of the second tensor
 * factor are in scope.  *normal_form receives the canonical normal form. */
wc_status wc_eval(wc_engine* e, const char* text, long p, unsigned n, int tensor,
                  char** normal_form);

void wc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WEYLCERT_H */
