#include "socnetgen.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <string>

#include "baselines.hpp"
#include "dynamics.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "params.hpp"

using namespace socnet;

namespace {

thread_local std::string g_last_error;

sng_status fail(sng_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
sng_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(SNG_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SNG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SNG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SNG_ERR_STATE, e.what());
    }
}

std::ofstream open_out(const char* path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(std::string("cannot open for writing: ") + path);
    return out;
}

} // namespace

struct sng_params {
    SimParams value;
};
struct sng_graph {
    DirectedGraph value;
};
struct sng_sim {
    RunResult value;
    sng_graph graph_view; // borrowed-handle storage for sng_sim_graph
};
struct sng_metrics {
    MetricsReport value;
};
struct sng_comparison {
    ComparisonReport value;
};

extern "C" {

const char* sng_version(void) { return "socnetgen 1.0.0"; }

const char* sng_last_error(void) { return g_last_error.c_str(); }

sng_params* sng_params_new(void) { return new sng_params{}; }
void sng_params_free(sng_params* p) { delete p; }

sng_status sng_params_set(sng_params* p, const char* key, double value) {
    if (!p || !key) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    SimParams& sp = p->value;
    std::string k(key);
    if (k == "nu") sp.nu = value;
    else if (k == "psi") sp.psi = value;
    else if (k == "kappa") sp.kappa = static_cast<uint32_t>(value);
    else if (k == "p_random") sp.p_random = value;
    else if (k == "p_triadic") sp.p_triadic = value;
    else if (k == "p_cumulative") sp.p_cumulative = value;
    else if (k == "p_distance") sp.p_distance = value;
    else if (k == "top_k") sp.top_k = static_cast<uint32_t>(value);
    else if (k == "distance_check") sp.distance_check = value != 0.0;
    else if (k == "n0") sp.n0 = static_cast<uint64_t>(value);
    else if (k == "target_nodes") sp.target_nodes = static_cast<uint64_t>(value);
    else if (k == "seed") sp.seed = static_cast<uint64_t>(value);
    else if (k == "budget_split_1") sp.budget_split[0] = value;
    else if (k == "budget_split_2") sp.budget_split[1] = value;
    else if (k == "budget_split_3") sp.budget_split[2] = value;
    else if (k == "budget_split_4") sp.budget_split[3] = value;
    else return fail(SNG_ERR_INVALID_ARGUMENT, "unknown parameter key: " + k);
    return SNG_OK;
}

sng_status sng_params_get(const sng_params* p, const char* key, double* value) {
    if (!p || !key || !value) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    const SimParams& sp = p->value;
    std::string k(key);
    if (k == "nu") *value = sp.nu;
    else if (k == "psi") *value = sp.psi;
    else if (k == "kappa") *value = sp.kappa;
    else if (k == "p_random") *value = sp.p_random;
    else if (k == "p_triadic") *value = sp.p_triadic;
    else if (k == "p_cumulative") *value = sp.p_cumulative;
    else if (k == "p_distance") *value = sp.p_distance;
    else if (k == "top_k") *value = sp.top_k;
    else if (k == "distance_check") *value = sp.distance_check ? 1.0 : 0.0;
    else if (k == "n0") *value = static_cast<double>(sp.n0);
    else if (k == "target_nodes") *value = static_cast<double>(sp.target_nodes);
    else if (k == "seed") *value = static_cast<double>(sp.seed);
    else if (k == "budget_split_1") *value = sp.budget_split[0];
    else if (k == "budget_split_2") *value = sp.budget_split[1];
    else if (k == "budget_split_3") *value = sp.budget_split[2];
    else if (k == "budget_split_4") *value = sp.budget_split[3];
    else return fail(SNG_ERR_INVALID_ARGUMENT, "unknown parameter key: " + k);
    return SNG_OK;
}

sng_status sng_params_validate(const sng_params* p) {
    if (!p) return fail(SNG_ERR_INVALID_ARGUMENT, "null params");
    return guarded([&] {
        p->value.validate();
        return SNG_OK;
    });
}

void sng_graph_free(sng_graph* g) { delete g; }
uint64_t sng_graph_nodes(const sng_graph* g) { return g ? g->value.node_count() : 0; }
uint64_t sng_graph_edges(const sng_graph* g) { return g ? g->value.edge_count() : 0; }
uint64_t sng_graph_in_degree(const sng_graph* g, uint32_t node) {
    return g && node < g->value.node_count() ? g->value.in_degree(node) : 0;
}
uint64_t sng_graph_out_degree(const sng_graph* g, uint32_t node) {
    return g && node < g->value.node_count() ? g->value.out_degree(node) : 0;
}

sng_status sng_graph_load(const char* path, sng_graph** out) {
    if (!path || !out) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        std::ifstream in(path);
        if (!in) return fail(SNG_ERR_IO, std::string("cannot open edge list: ") + path);
        LoadResult loaded = load_edge_list(in);
        *out = new sng_graph{std::move(loaded.graph)};
        return SNG_OK;
    });
}

sng_status sng_graph_write(const sng_graph* g, const char* path) {
    if (!g || !path) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        try {
            write_edge_list(g->value, path);
        } catch (const std::runtime_error& e) {
            return fail(SNG_ERR_IO, e.what());
        }
        return SNG_OK;
    });
}

sng_status sng_simulate(const sng_params* p, sng_sim** out) {
    if (!p || !out) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        auto* sim = new sng_sim{run(p->value), {}};
        sim->graph_view.value = std::move(sim->value.graph);
        *out = sim;
        return SNG_OK;
    });
}

void sng_sim_free(sng_sim* s) { delete s; }

const sng_graph* sng_sim_graph(const sng_sim* s) {
    return s ? &s->graph_view : nullptr;
}

uint64_t sng_sim_turns(const sng_sim* s) { return s ? s->value.turns.size() : 0; }

sng_status sng_sim_write_turns_csv(const sng_sim* s, const char* path) {
    if (!s || !path) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        auto out = open_out(path);
        write_turns_csv(s->value.turns, out);
        return SNG_OK;
    });
}

sng_status sng_baseline_erdos_renyi(uint64_t n, double p, uint64_t seed,
                                    sng_graph** out) {
    if (!out) return fail(SNG_ERR_INVALID_ARGUMENT, "null out");
    return guarded([&]() -> sng_status {
        *out = new sng_graph{generate_erdos_renyi(n, p, seed)};
        return SNG_OK;
    });
}

sng_status sng_baseline_pref_attach(uint64_t n, uint64_t m, uint64_t seed,
                                    sng_graph** out) {
    if (!out) return fail(SNG_ERR_INVALID_ARGUMENT, "null out");
    return guarded([&]() -> sng_status {
        *out = new sng_graph{generate_pref_attach(n, m, seed)};
        return SNG_OK;
    });
}

void sng_metrics_options_defaults(sng_metrics_options* opts) {
    if (!opts) return;
    MetricsOptions d;
    opts->exact_threshold = d.exact_threshold;
    opts->sample_sources = d.sample_sources;
    opts->seed = d.seed;
    opts->centralities = d.centralities ? 1 : 0;
    opts->eigen_tol = d.eigen_tol;
    opts->eigen_max_iter = d.eigen_max_iter;
}

sng_status sng_metrics_compute(const sng_graph* g, const sng_metrics_options* opts,
                               sng_metrics** out) {
    if (!g || !out) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        MetricsOptions mo;
        if (opts) {
            mo.exact_threshold = opts->exact_threshold;
            mo.sample_sources = opts->sample_sources;
            mo.seed = opts->seed;
            mo.centralities = opts->centralities != 0;
            mo.eigen_tol = opts->eigen_tol;
            mo.eigen_max_iter = opts->eigen_max_iter;
        }
        *out = new sng_metrics{compute_metrics(g->value, mo)};
        return SNG_OK;
    });
}

void sng_metrics_free(sng_metrics* m) { delete m; }

sng_status sng_metrics_scalar(const sng_metrics* m, const char* key, double* value) {
    if (!m || !key || !value) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    const MetricsReport& r = m->value;
    std::string k(key);
    if (k == "nodes") *value = static_cast<double>(r.nodes);
    else if (k == "edges") *value = static_cast<double>(r.edges);
    else if (k == "avg_degree") *value = r.avg_degree;
    else if (k == "diameter") *value = static_cast<double>(r.diameter);
    else if (k == "avg_path_length") *value = r.avg_path_length;
    else if (k == "modularity") *value = r.modularity;
    else return fail(SNG_ERR_INVALID_ARGUMENT, "unknown metric key: " + k);
    return SNG_OK;
}

sng_status sng_metrics_flag(const sng_metrics* m, const char* key, int* value) {
    if (!m || !key || !value) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    const MetricsReport& r = m->value;
    std::string k(key);
    if (k == "modularity_defined") *value = r.modularity_defined;
    else if (k == "paths_sampled") *value = r.paths_sampled;
    else if (k == "betweenness_sampled") *value = r.betweenness_sampled;
    else if (k == "closeness_sampled") *value = r.closeness_sampled;
    else if (k == "eigen_converged") *value = r.eigen_converged;
    else return fail(SNG_ERR_INVALID_ARGUMENT, "unknown flag key: " + k);
    return SNG_OK;
}

sng_status sng_metrics_write_report(const sng_metrics* m, const char* path) {
    if (!m || !path) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        auto out = open_out(path);
        write_metrics_report(m->value, out);
        return SNG_OK;
    });
}

sng_status sng_metrics_write_centrality_csv(const sng_metrics* m,
                                            const char* which, const char* path) {
    if (!m || !which || !path) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        const std::vector<double>* scores = nullptr;
        std::string w(which);
        if (w == "eigenvector") scores = &m->value.eigenvector_scores;
        else if (w == "betweenness") scores = &m->value.betweenness_scores;
        else if (w == "closeness") scores = &m->value.closeness_scores;
        else return fail(SNG_ERR_INVALID_ARGUMENT, "unknown centrality: " + w);
        auto out = open_out(path);
        write_centrality_csv(*scores, out);
        return SNG_OK;
    });
}

sng_status sng_graph_write_degree_loglog(const sng_graph* g, const char* direction,
                                         uint32_t bins, const char* path) {
    if (!g || !direction || !path) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        Direction dir;
        std::string d(direction);
        if (d == "in") dir = Direction::In;
        else if (d == "out") dir = Direction::Out;
        else if (d == "total") dir = Direction::Total;
        else return fail(SNG_ERR_INVALID_ARGUMENT, "unknown direction: " + d);
        auto points = export_loglog(degree_histogram(g->value, dir), bins);
        auto out = open_out(path);
        write_points_csv(points, out);
        return SNG_OK;
    });
}

sng_status sng_compare(const sng_metrics* left, const sng_metrics* right,
                       const double* weights, sng_comparison** out) {
    if (!left || !right || !out) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        std::array<double, 6> w{1, 1, 1, 1, 1, 1};
        if (weights) std::copy(weights, weights + 6, w.begin());
        *out = new sng_comparison{compare(left->value, right->value, w)};
        return SNG_OK;
    });
}

void sng_comparison_free(sng_comparison* c) { delete c; }

double sng_comparison_objective(const sng_comparison* c) {
    return c ? c->value.objective : -1.0;
}

sng_status sng_comparison_write(const sng_comparison* c, const char* path) {
    if (!c || !path) return fail(SNG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&]() -> sng_status {
        auto out = open_out(path);
        write_comparison_report(c->value, out);
        return SNG_OK;
    });
}

uint64_t sng_derive_seed(uint64_t master, uint64_t index) {
    return derive_seed(master, index);
}

} // extern "C"
