#ifndef TRICOLOR_H
#define TRICOLOR_H

/* C interface to the sum-free set toolkit. All functions return a status
 * code; output strings are heap-allocated, owned by the caller, and released
 * with tc_string_free. On failure tc_last_error() describes what went wrong
 * for the current thread. */

#include <stdint.h>

#ifndef TC_API
#if defined(_WIN32)
#define TC_API
#else
#define TC_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_EINVAL = 1,   /* bad argument or inconsistent inputs */
    TC_EPARSE = 2,   /* malformed document */
    TC_ELIMIT = 3,   /* request exceeds a documented engine limit */
    TC_EVERIFY = 4,  /* internal verification tripped; indicates a bug */
    TC_EIO = 5,      /* file system failure */
    TC_EINTERNAL = 6 /* unexpected failure */
} tc_status;

/* Message for the most recent failure on the calling thread. Never NULL;
 * empty when no failure has occurred. The buffer stays valid until the next
 * failing call on the same thread. */
TC_API const char* tc_last_error(void);

TC_API void tc_string_free(char* s);

/* Size bounds as a JSON document: dimensions, dim_L, the 3*dim_L bound, the
 * 6*C(n, n/3) form when p = 2, and the lower-bound formula value. */
TC_API tc_status tc_bound_report_json(int n, int p, char** out_json);

/* Progression-free subset of Z/MZ as {"M":...,"elements":[...]}. method is
 * "behrend", "greedy", or "exact" (NULL means "greedy"). */
TC_API tc_status tc_apfree_build_json(uint64_t m, const char* method, char** out_json);

/* Maximum progression-free subset of Z/MZ (m <= 40), with its size. */
TC_API tc_status tc_max_apfree_exact_json(uint64_t m, char** out_json);

/* log2(M)^(1/4) * 2^(-sqrt(8 log2 M)) * M, m >= 2. */
TC_API tc_status tc_elkin_bound(uint64_t m, double* out_value);

/* Both verifiers take the line format produced by tc_construction_set_jsonl.
 * On TC_OK, *out_valid is 1 or 0 and *out_verdict_json (when non-NULL) holds
 * {"valid":true} or {"valid":false,"kind":...,"i":...,"j":...,"k":...}.
 * The pms check reads only the "a" and "b" columns. */
TC_API tc_status tc_verify_tcsfs_jsonl(const char* jsonl, int* out_valid, char** out_verdict_json);
TC_API tc_status tc_verify_pms_jsonl(const char* jsonl, int* out_valid, char** out_verdict_json);

typedef struct tc_construct_params {
    int n;                  /* requested dimension, >= 1 */
    uint64_t m;             /* modulus; 0 selects 4*C(2n'/3,n'/3)+1 */
    const char* b_method;   /* "behrend" | "greedy" | "exact"; NULL = "greedy" */
    const char* b_set_json; /* explicit filter set JSON; NULL builds via b_method */
    uint64_t seed;
    int trials;        /* >= 1 */
    int threads;       /* worker cap, 0 means 1; results do not depend on it */
    int verify_trials; /* nonzero re-checks every trial's output set */
} tc_construct_params;

typedef struct tc_construction tc_construction;

/* Runs seeded trials of the randomized construction. The handle owns the
 * per-trial statistics and the largest constructed set. */
TC_API tc_status tc_construct(const tc_construct_params* params, tc_construction** out);
TC_API void tc_construction_free(tc_construction* c);

/* Largest constructed set in the line format. */
TC_API tc_status tc_construction_set_jsonl(const tc_construction* c, char** out);
/* {"params":...,"trials":[...],"predicted_EY":"p/q"}; independent of the
 * thread count used to produce it. */
TC_API tc_status tc_construction_stats_json(const tc_construction* c, char** out);
/* Empirical means and standard errors next to the exact predictions. */
TC_API tc_status tc_construction_summary_json(const tc_construction* c, char** out);

/* Exhaustive maximum search for n <= 3. node_budget = 0 runs to completion;
 * otherwise the result marks proven = false when the budget ran out. */
TC_API tc_status tc_oracle_tcsfs_json(int n, uint64_t node_budget, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRICOLOR_H */
