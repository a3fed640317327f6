/*
 * aatkit C API.
 *
 * Every entry point returns an aatkit_status (0 on success). On failure the
 * message is available from aatkit_last_error() on the same thread and any
 * output pointer is left NULL. Documents cross the boundary as UTF-8 JSON;
 * results are opaque handles owning their text.
 */
#ifndef AATKIT_AATKIT_H
#define AATKIT_AATKIT_H

#include <stddef.h>

#if defined(_WIN32)
#define AATKIT_API __declspec(dllexport)
#else
#define AATKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aatkit_status {
  AATKIT_OK = 0,
  AATKIT_INVALID_INPUT = 1,
  AATKIT_PARSE_ERROR = 2,
  AATKIT_CURVE_EQUATION_VIOLATED = 3,
  AATKIT_UNSUPPORTED_ODE = 4,
  AATKIT_ORDER_EXCEEDED = 5,
  AATKIT_VARIABLE_MISMATCH = 6,
  AATKIT_BUDGET_EXCEEDED = 7,
  AATKIT_ORDER_TOO_LOW = 8,
  AATKIT_ARITY_MISMATCH = 9,
  AATKIT_DENOMINATOR_NOT_UNIT = 10,
  AATKIT_SINGULAR_ALPHA = 11,
  AATKIT_MISSING_APPROXIMATION = 12,
  AATKIT_EVALUATION_DIVERGENCE = 13,
  AATKIT_DEGENERATE_FIBER = 14,
  AATKIT_AMBIGUOUS_SAMPLE = 15,
  AATKIT_OUTSIDE_CELL = 16,
  AATKIT_NOT_FOUND = 17,
  AATKIT_IO_ERROR = 18,
  AATKIT_INTERNAL = 99
} aatkit_status;

/* Verdict tier of a result; the CLI uses it as its exit code. */
typedef enum aatkit_verdict {
  AATKIT_VERDICT_PASS = 0,      /* PASS, CLEAN, DEPENDENT, EQUAL, found */
  AATKIT_VERDICT_FAIL = 1,      /* FAIL, residual, DIFFERENT */
  AATKIT_VERDICT_UNRESOLVED = 2 /* UNRESOLVED, INDEPENDENT_UP_TO, NOT_FOUND */
} aatkit_verdict;

typedef struct aatkit_germ aatkit_germ;
typedef struct aatkit_result aatkit_result;

AATKIT_API const char* aatkit_version(void);
/* "PARSE_ERROR" etc.; "UNKNOWN" for values outside the enum. */
AATKIT_API const char* aatkit_status_name(int status);
AATKIT_API const char* aatkit_last_error(void);

/* Germ maps. `name` is "catalog:<entry>" or the bare entry name. */
AATKIT_API int aatkit_germ_from_json(const char* json, aatkit_germ** out);
AATKIT_API int aatkit_germ_from_catalog(const char* name, unsigned order, aatkit_germ** out);
AATKIT_API size_t aatkit_germ_dimension(const aatkit_germ* germ);
AATKIT_API unsigned aatkit_germ_order(const aatkit_germ* germ);
AATKIT_API int aatkit_germ_to_json(const aatkit_germ* germ, aatkit_result** out);
AATKIT_API void aatkit_germ_free(aatkit_germ* germ);

/* AAT certificate for a germ; max_monomials 0 selects the default cap. */
AATKIT_API int aatkit_aat_check(const aatkit_germ* germ, unsigned degree, unsigned order, size_t max_monomials,
                                aatkit_result** out);
/* alpha_json is an n x n matrix such as "[[2]]" or "[2]". */
AATKIT_API int aatkit_iso_witness(const aatkit_germ* f, const aatkit_germ* g, const char* alpha_json,
                                  unsigned degree, unsigned order, size_t max_monomials, aatkit_result** out);

/*
 * Runs one command on a JSON request. Commands: aat-check, verify-aat,
 * algdep, verify-annihilator, verify-system, iso-witness, verify-iso,
 * periods, rank-report, branch, period-check, catalog, condition-star,
 * promote, group-law, verify. The result document echoes the request so it
 * can be re-run by "verify".
 */
AATKIT_API int aatkit_run(const char* command, const char* request_json, aatkit_result** out);

AATKIT_API const char* aatkit_result_json(const aatkit_result* result);
AATKIT_API int aatkit_result_verdict(const aatkit_result* result);
AATKIT_API void aatkit_result_free(aatkit_result* result);

#ifdef __cplusplus
}
#endif

#endif /* AATKIT_AATKIT_H */
