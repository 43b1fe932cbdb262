/* urnwalk C API: exact expected maxima of urn random walks.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return UW_OK on success; on failure they return an error code and leave a
 * thread-local message readable via uw_last_error(). Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with uw_string_free().
 */
#ifndef URNWALK_H
#define URNWALK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uw_status {
  UW_OK = 0,
  UW_EINVAL = 1,      /* invalid argument or configuration */
  UW_EINFEASIBLE = 2, /* workload refused (factorial cap, rank overflow) */
  UW_ETIMEOUT = 3,    /* cooperative deadline expired */
  UW_EINTERNAL = 4    /* unexpected failure */
} uw_status;

typedef enum uw_method {
  UW_METHOD_EXHAUSTIVE = 0,        /* all n! marble permutations */
  UW_METHOD_COMBOS_RECURSIVE = 1,  /* one representative per permutation group */
  UW_METHOD_COMBOS_ITERATIVE = 2,  /* successor-based, partitionable */
  UW_METHOD_DP = 3                 /* lattice-path dynamic programming */
} uw_method;

const char* uw_version(void);

/* Thread-local message for the most recent failure; "" when none. */
const char* uw_last_error(void);

void uw_string_free(char* s);

/* --- urn configuration ------------------------------------------------- */

typedef struct uw_urn_config uw_urn_config;

/* Standard urn: delta white marbles, delta/2 red. delta must be even, >= 0. */
uw_status uw_urn_config_new(int64_t delta, uw_urn_config** out);
/* Custom white/red split (the standard split is the contract-tested path). */
uw_status uw_urn_config_new_custom(int64_t whites, int64_t reds, uw_urn_config** out);
void uw_urn_config_free(uw_urn_config* cfg);

int64_t uw_urn_config_delta(const uw_urn_config* cfg);
int64_t uw_urn_config_whites(const uw_urn_config* cfg);
int64_t uw_urn_config_reds(const uw_urn_config* cfg);
int64_t uw_urn_config_total(const uw_urn_config* cfg);

/* C(n, reds) as a decimal string. */
uw_status uw_urn_sequence_count(const uw_urn_config* cfg, char** out);

/* --- with-replacement configuration ------------------------------------ */

typedef struct uw_iid_config uw_iid_config;

/* Horizon 3*delta/2 at p = 1/3. */
uw_status uw_iid_config_new(int64_t delta, uw_iid_config** out);
/* Explicit horizon and up-probability p_num/p_den with 0 < p < 1. */
uw_status uw_iid_config_new_p(int64_t steps, int64_t p_num, int64_t p_den, uw_iid_config** out);
void uw_iid_config_free(uw_iid_config* cfg);

int64_t uw_iid_config_steps(const uw_iid_config* cfg);

/* --- exact computation -------------------------------------------------- */

typedef struct uw_options {
  int prune_horizon;            /* stop a walk once its maximum is final */
  int prune_lexicographic;      /* skip the all-zero lexicographic tail */
  int workers;                  /* iterative method only; never changes values */
  int64_t exhaustive_cap_delta; /* refuse n! blowup past this delta */
  double timeout_ms;            /* <= 0: none */
} uw_options;

/* Fills defaults: pruning on, 1 worker, cap 8, no timeout. */
void uw_options_init(uw_options* opts);

typedef struct uw_report uw_report;

uw_status uw_urn_expected_max(const uw_urn_config* cfg, uw_method method, const uw_options* opts,
                              uw_report** out);
uw_status uw_iid_expected_max(const uw_iid_config* cfg, uw_report** out);

/* p/(q-p) for 0 < p < 1/2; "1" exactly at p = 1/3. */
uw_status uw_iid_expected_max_limit(int64_t p_num, int64_t p_den, char** out);

uw_status uw_report_fraction(const uw_report* report, char** out); /* lowest terms */
uw_status uw_report_decimal(const uw_report* report, int precision, char** out);
uint64_t uw_report_sequences_evaluated(const uw_report* report);
uint64_t uw_report_sequences_skipped(const uw_report* report);
uint64_t uw_report_walks_truncated(const uw_report* report);
uint64_t uw_report_steps_evaluated(const uw_report* report);
uint64_t uw_report_nodes_pruned(const uw_report* report);
double uw_report_elapsed_ms(const uw_report* report);
void uw_report_free(uw_report* report);

/* --- Monte Carlo --------------------------------------------------------- */

typedef struct uw_sample_report uw_sample_report;

uw_status uw_sample_urn(const uw_urn_config* cfg, uint64_t trials, uint64_t seed, int workers,
                        uw_sample_report** out);
uw_status uw_sample_iid(const uw_iid_config* cfg, uint64_t trials, uint64_t seed, int workers,
                        uw_sample_report** out);

double uw_sample_mean(const uw_sample_report* report);
double uw_sample_std_error(const uw_sample_report* report);
uint64_t uw_sample_trials(const uw_sample_report* report);
uint64_t uw_sample_seed(const uw_sample_report* report);
int uw_sample_workers(const uw_sample_report* report);
const char* uw_sample_generator(const uw_sample_report* report); /* owned by report */
void uw_sample_report_free(uw_sample_report* report);

/* --- reporting ----------------------------------------------------------- */

/* `methods` is a comma-separated list of "exhaustive", "combos",
 * "combos-iter", "dp". Marked cells (infeasible/timeout) are counted into
 * *failed_cells when non-NULL. */
uw_status uw_table_csv(int64_t delta_max, const char* methods, const uw_options* opts,
                       int precision, char** out, size_t* failed_cells);
uw_status uw_figure_csv(int64_t delta_max, int precision, char** out);
uw_status uw_bench_csv(int64_t delta_min, int64_t delta_max, const char* methods,
                       double timeout_ms, char** out, size_t* failed_cells);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* URNWALK_H */
