/* C API for the social network growth simulator. Opaque handles, integer
 * status codes; sng_last_error() holds a thread-local message for the most
 * recent failing call. All functions are safe to call from multiple threads
 * as long as no handle is shared between threads concurrently.
 */
#ifndef SOCNETGEN_H
#define SOCNETGEN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sng_status {
    SNG_OK = 0,
    SNG_ERR_INVALID_ARGUMENT = 1,
    SNG_ERR_IO = 2,
    SNG_ERR_PARSE = 3,
    SNG_ERR_STATE = 4
} sng_status;

const char* sng_version(void);
const char* sng_last_error(void);

/* ---- simulation parameters ---- */

typedef struct sng_params sng_params;

sng_params* sng_params_new(void);
void sng_params_free(sng_params* p);

/* Numeric keys: nu, psi, kappa, p_random, p_triadic, p_cumulative,
 * p_distance, top_k, distance_check (0/1), n0, target_nodes, seed,
 * budget_split_1 .. budget_split_4. Unknown key -> SNG_ERR_INVALID_ARGUMENT.
 */
sng_status sng_params_set(sng_params* p, const char* key, double value);
sng_status sng_params_get(const sng_params* p, const char* key, double* value);
sng_status sng_params_validate(const sng_params* p);

/* ---- graphs ---- */

typedef struct sng_graph sng_graph;

void sng_graph_free(sng_graph* g);
uint64_t sng_graph_nodes(const sng_graph* g);
uint64_t sng_graph_edges(const sng_graph* g);
uint64_t sng_graph_in_degree(const sng_graph* g, uint32_t node);
uint64_t sng_graph_out_degree(const sng_graph* g, uint32_t node);

sng_status sng_graph_load(const char* path, sng_graph** out);
sng_status sng_graph_write(const sng_graph* g, const char* path);

/* ---- simulation ---- */

typedef struct sng_sim sng_sim;

sng_status sng_simulate(const sng_params* p, sng_sim** out);
void sng_sim_free(sng_sim* s);
const sng_graph* sng_sim_graph(const sng_sim* s); /* borrowed */
uint64_t sng_sim_turns(const sng_sim* s);
sng_status sng_sim_write_turns_csv(const sng_sim* s, const char* path);

/* ---- baselines ---- */

sng_status sng_baseline_erdos_renyi(uint64_t n, double p, uint64_t seed,
                                    sng_graph** out);
sng_status sng_baseline_pref_attach(uint64_t n, uint64_t m, uint64_t seed,
                                    sng_graph** out);

/* ---- metrics ---- */

typedef struct sng_metrics_options {
    uint64_t exact_threshold; /* exact paths/centralities up to this size */
    uint32_t sample_sources;  /* BFS/pivot sample above the threshold */
    uint64_t seed;            /* metric-side RNG (Louvain order, sampling) */
    int centralities;         /* 0 skips the per-node centrality arrays */
    double eigen_tol;
    uint32_t eigen_max_iter;
} sng_metrics_options;

void sng_metrics_options_defaults(sng_metrics_options* opts);

typedef struct sng_metrics sng_metrics;

sng_status sng_metrics_compute(const sng_graph* g,
                               const sng_metrics_options* opts, /* NULL = defaults */
                               sng_metrics** out);
void sng_metrics_free(sng_metrics* m);

/* Scalar keys: nodes, edges, avg_degree, diameter, avg_path_length,
 * modularity. Flag keys: modularity_defined, paths_sampled,
 * betweenness_sampled, closeness_sampled, eigen_converged. */
sng_status sng_metrics_scalar(const sng_metrics* m, const char* key, double* value);
sng_status sng_metrics_flag(const sng_metrics* m, const char* key, int* value);

sng_status sng_metrics_write_report(const sng_metrics* m, const char* path);
/* which: eigenvector | betweenness | closeness */
sng_status sng_metrics_write_centrality_csv(const sng_metrics* m,
                                            const char* which, const char* path);
/* direction: in | out | total; bins = 0 emits raw (value, count) points */
sng_status sng_graph_write_degree_loglog(const sng_graph* g, const char* direction,
                                         uint32_t bins, const char* path);

/* ---- comparison ---- */

typedef struct sng_comparison sng_comparison;

/* weights: 6 entries over nodes, edges, avg_degree, diameter,
 * avg_path_length, modularity; NULL = all ones. */
sng_status sng_compare(const sng_metrics* left, const sng_metrics* right,
                       const double* weights, sng_comparison** out);
void sng_comparison_free(sng_comparison* c);
double sng_comparison_objective(const sng_comparison* c);
sng_status sng_comparison_write(const sng_comparison* c, const char* path);

/* Stable per-point seed derivation for parameter sweeps. */
uint64_t sng_derive_seed(uint64_t master, uint64_t index);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SOCNETGEN_H */
