/* hampow — power-of-tight-Hamilton-cycle combinatorics for uniform
 * hypergraphs: exact overlap enumeration, threshold constants, spanning-cycle
 * search, and seeded Monte Carlo scans.
 *
 * C interface over the C++ core. All functions returning hp_status set a
 * thread-local message retrievable with hp_last_error() on failure. Strings
 * returned through char** out parameters are heap-allocated; release them
 * with hp_string_free().
 */
#ifndef HAMPOW_H
#define HAMPOW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp_status {
  HP_OK = 0,
  HP_ERR_INVALID_ARGUMENT = 1,
  HP_ERR_GUARD = 2, /* an explicit feasibility guard refused the computation */
  HP_ERR_IO = 3,
  HP_ERR_INTERNAL = 4
} hp_status;

typedef struct hp_hypergraph hp_hypergraph;

const char* hp_version(void);
const char* hp_last_error(void);
void hp_string_free(char* s);

/* ---- hypergraphs ------------------------------------------------------ */

/* edges: edge_count rows of r vertex indices each, row-major. */
hp_status hp_hypergraph_create(int n, int r, const int* edges, size_t edge_count,
                               hp_hypergraph** out);
hp_status hp_hypergraph_read_file(const char* path, hp_hypergraph** out);
hp_status hp_hypergraph_write_file(const hp_hypergraph* h, const char* path);
void hp_hypergraph_free(hp_hypergraph* h);

int hp_hypergraph_vertex_count(const hp_hypergraph* h);
int hp_hypergraph_uniformity(const hp_hypergraph* h);
long hp_hypergraph_edge_count(const hp_hypergraph* h);

/* perm: NULL for the identity ordering, otherwise n vertex values. */
hp_status hp_build_power_cycle(int n, int r, int k, const int* perm, hp_hypergraph** out);

/* ---- closed forms and exact reports ------------------------------------ */

/* Threshold constants and structural formulas as JSON. */
hp_status hp_constants_json(int r, int k, char** out);

/* Exact overlap histogram as CSV rows "b,s,count". guard_max_n <= 0 keeps
 * the default guard (n <= 12); workers <= 0 means one worker. */
hp_status hp_overlap_csv(int n, int r, int k, int guard_max_n, int workers, char** out);

/* Exact (b,s) census of edge subsets as CSV "b,s,v_min,count,p1_bound".
 * guard_max_subsets <= 0 keeps the default guard (1e7 subsets per b). */
hp_status hp_profiles_csv(int n, int r, int k, long b_max, long guard_max_subsets, char** out);

/* Exact E[X], E[X^2] and the overlap sum as JSON. p is a rational literal
 * ("1/2", "0.3"). */
hp_status hp_second_moment_json(int n, int r, int k, const char* p, int guard_max_n, int workers,
                                char** out);

/* Exact containment probability with its second-moment lower bound as JSON.
 * guard_max_rsets <= 0 keeps the default guard (binom(n,r) <= 20). */
hp_status hp_exact_prob_json(int n, int r, int k, const char* p, long guard_max_rsets, int workers,
                             char** out);

/* ---- search ------------------------------------------------------------ */

/* outcome_out: 0 found, 1 not found, 2 timed out. timeout_seconds <= 0 means
 * no time limit. */
hp_status hp_search_json(const hp_hypergraph* h, int k, double timeout_seconds, char** out,
                         int* outcome_out);

/* ---- Monte Carlo scans -------------------------------------------------- */

/* CSV with header n,r,k,C,p,trials,successes,timeouts,p_hat,stderr,seed. */
hp_status hp_scan_csv(int n, int r, int k, const double* c_grid, size_t c_grid_len, long trials,
                      uint64_t seed, double timeout_seconds, int workers, char** out);

/* ---- invariant batteries ------------------------------------------------ */

/* suite: "facts", "bounds", "moments", "search", or "all".
 * search_instances_* <= 0 keep the defaults (200 and 100).
 * failures_out receives the number of failed checks. */
hp_status hp_verify_json(const char* suite, uint64_t seed, int workers,
                         long search_instances_tight, long search_instances_square, char** out,
                         long* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* HAMPOW_H */
