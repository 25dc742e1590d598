/*
 * C interface to the closed-itemset miner.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a sofia_status; on failure the message is
 * available from sofia_last_error() on the calling thread until the next
 * failing call.
 */
#ifndef SOFIA_SOFIA_H
#define SOFIA_SOFIA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SOFIA_BUILDING_LIBRARY)
#    define SOFIA_API __declspec(dllexport)
#  else
#    define SOFIA_API __declspec(dllimport)
#  endif
#else
#  define SOFIA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sofia_status {
    SOFIA_OK = 0,
    SOFIA_ERR_PARSE = 1,            /* malformed or unreadable FIMI input */
    SOFIA_ERR_INVALID_ARGUMENT = 2, /* bad flag value or combination */
    SOFIA_ERR_ORACLE_GUARD = 3,     /* dataset too large for the exact oracle */
    SOFIA_ERR_INTERNAL = 4
} sofia_status;

typedef enum sofia_measure {
    SOFIA_MEASURE_DELTA = 0,
    SOFIA_MEASURE_COSINE = 1,
    SOFIA_MEASURE_SUPPORT = 2
} sofia_measure;

typedef enum sofia_order {
    SOFIA_ORDER_ASCENDING_SUPPORT = 0,
    SOFIA_ORDER_DESCENDING_SUPPORT = 1,
    SOFIA_ORDER_INPUT = 2
} sofia_order;

typedef struct sofia_dataset sofia_dataset;
typedef struct sofia_result sofia_result;

/* Read-only view of one mined pattern. Pointers stay valid until the owning
 * result is freed. Bound and exact fields are NaN until filled by
 * sofia_result_compute_bounds / sofia_result_compute_exact. */
typedef struct sofia_pattern {
    const uint64_t* items; /* external item ids, ascending */
    size_t n_items;
    uint64_t support;
    double measure;
    double stability_lower;
    double stability_upper;
    double robustness_lower;
    double robustness_upper;
    double exact_stability;
    double exact_robustness;
} sofia_pattern;

SOFIA_API const char* sofia_last_error(void);

/* ---- datasets ---- */

SOFIA_API sofia_status sofia_dataset_load(const char* path, sofia_dataset** out);
SOFIA_API sofia_status sofia_dataset_parse(const char* text, size_t length, sofia_dataset** out);
SOFIA_API void sofia_dataset_free(sofia_dataset* ds);

SOFIA_API size_t sofia_dataset_transactions(const sofia_dataset* ds);
SOFIA_API size_t sofia_dataset_items(const sofia_dataset* ds);

/* Dataset of the first `count` transactions of a permutation of `ds` drawn
 * from `seed`. Items absent from the selection are dropped. */
SOFIA_API sofia_status sofia_dataset_permuted_prefix(const sofia_dataset* ds, uint64_t seed,
                                                     size_t count, sofia_dataset** out);

/* ---- mining ---- */

/* Adaptive top-L miner; theta_min is the starting threshold. */
SOFIA_API sofia_status sofia_mine_top(const sofia_dataset* ds, sofia_measure measure,
                                      sofia_order order, size_t limit, double theta_min,
                                      sofia_result** out);

/* Fixed-threshold miner: every closed pattern with measure > theta. */
SOFIA_API sofia_status sofia_mine_threshold(const sofia_dataset* ds, sofia_measure measure,
                                            sofia_order order, double theta, sofia_result** out);

/* Mine-then-postprune baseline keeping the top `k` patterns. */
SOFIA_API sofia_status sofia_baseline_top(const sofia_dataset* ds, sofia_measure measure,
                                          size_t k, sofia_result** out);

/* Every non-empty closed pattern with its measure (threshold -inf). */
SOFIA_API sofia_status sofia_enumerate(const sofia_dataset* ds, sofia_measure measure,
                                       sofia_result** out);

/* ---- results ---- */

SOFIA_API void sofia_result_free(sofia_result* result);

/* Patterns are ordered by measure descending, then support descending, then
 * intent lexicographically. */
SOFIA_API size_t sofia_result_size(const sofia_result* result);
SOFIA_API double sofia_result_theta(const sofia_result* result);
SOFIA_API sofia_status sofia_result_pattern(const sofia_result* result, size_t index,
                                            sofia_pattern* out);

/* Work counters of the run: preimages evaluated, largest pattern set. */
SOFIA_API uint64_t sofia_result_preimage_evaluations(const sofia_result* result);
SOFIA_API uint64_t sofia_result_max_patterns(const sofia_result* result);

/* Number of patterns whose stability lower bound was clamped at 0. */
SOFIA_API size_t sofia_result_clamped_bounds(const sofia_result* result);

/* Fills stability bounds and robustness bounds at `alpha` for every pattern,
 * evaluated in the full dataset. */
SOFIA_API sofia_status sofia_result_compute_bounds(sofia_result* result, const sofia_dataset* ds,
                                                   double alpha);

/* Fills exact stability and robustness at `alpha` by subdataset enumeration.
 * Fails with SOFIA_ERR_ORACLE_GUARD on datasets with more than 25
 * transactions. */
SOFIA_API sofia_status sofia_result_compute_exact(sofia_result* result, const sofia_dataset* ds,
                                                  double alpha);

#ifdef __cplusplus
}
#endif

#endif /* SOFIA_SOFIA_H */
