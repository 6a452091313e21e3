// Command-line front end for the socnetgen shared library. Subcommands:
// grow, metrics, compare, baseline, sweep. Exit codes: 0 success, 2 config
// error, 3 input error, 4 runtime failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "socnetgen.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitRuntime = 4;

struct CliError {
    int code;
    std::string message;
};

bool log_enabled() {
    const char* level = std::getenv("SOCNETGEN_LOG");
    return level == nullptr || std::string(level) != "quiet";
}

void log_info(const std::string& msg) {
    if (log_enabled()) std::cerr << "[socnetgen] " << msg << '\n';
}

[[noreturn]] void die(int code, const std::string& msg) {
    throw CliError{code, msg};
}

void check(sng_status st, int code_on_error) {
    if (st != SNG_OK) die(code_on_error, sng_last_error());
}

// RAII wrappers over the C handles.
template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    explicit Handle(T* p) : ptr(p) {}
    ~Handle() { reset(); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : ptr(o.ptr) { o.ptr = nullptr; }
    Handle& operator=(Handle&& o) noexcept {
        if (this != &o) {
            reset();
            ptr = o.ptr;
            o.ptr = nullptr;
        }
        return *this;
    }
    void reset() {
        if (ptr) Free(ptr);
        ptr = nullptr;
    }
    T** out() {
        reset();
        return &ptr;
    }
    T* get() const { return ptr; }
};

using ParamsHandle = Handle<sng_params, sng_params_free>;
using GraphHandle = Handle<sng_graph, sng_graph_free>;
using SimHandle = Handle<sng_sim, sng_sim_free>;
using MetricsHandle = Handle<sng_metrics, sng_metrics_free>;
using ComparisonHandle = Handle<sng_comparison, sng_comparison_free>;

const std::vector<std::string> kDynamicsKeys = {"nu", "psi", "kappa", "n0",
                                                "target_nodes", "seed"};
const std::vector<std::string> kRuleKeys = {"p_random", "p_triadic",
                                            "p_cumulative", "p_distance",
                                            "top_k", "distance_check"};

json load_json(const std::string& path, int code_on_error) {
    std::ifstream in(path);
    if (!in) die(code_on_error, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        die(code_on_error, path + ": " + e.what());
    }
    return j;
}

double as_number(const json& v, const std::string& field) {
    if (v.is_boolean()) return v.get<bool>() ? 1.0 : 0.0;
    if (!v.is_number()) die(kExitConfig, "field " + field + " must be numeric");
    return v.get<double>();
}

// Applies the dynamics/rules sections of a config document onto params.
void apply_config(sng_params* params, const json& cfg) {
    auto apply_section = [&](const char* section, const std::vector<std::string>& keys) {
        if (!cfg.contains(section)) return;
        const json& sec = cfg.at(section);
        if (!sec.is_object()) die(kExitConfig, std::string(section) + " must be an object");
        for (auto& [key, value] : sec.items()) {
            if (key == "budget_split") {
                if (!value.is_array() || value.size() != 4)
                    die(kExitConfig, "budget_split must be an array of 4 fractions");
                for (int i = 0; i < 4; ++i) {
                    std::string k = "budget_split_" + std::to_string(i + 1);
                    check(sng_params_set(params, k.c_str(),
                                         as_number(value[i], k)),
                          kExitConfig);
                }
                continue;
            }
            bool known = std::find(keys.begin(), keys.end(), key) != keys.end();
            if (!known) die(kExitConfig, std::string(section) + "." + key + " is not a recognized field");
            check(sng_params_set(params, key.c_str(), as_number(value, key)),
                  kExitConfig);
        }
    };
    apply_section("dynamics", kDynamicsKeys);
    apply_section("rules", kRuleKeys);
}

sng_metrics_options metrics_options_from_config(const json& cfg) {
    sng_metrics_options opts;
    sng_metrics_options_defaults(&opts);
    if (!cfg.contains("metrics")) return opts;
    const json& sec = cfg.at("metrics");
    if (sec.contains("exact_threshold"))
        opts.exact_threshold = sec.at("exact_threshold").get<uint64_t>();
    if (sec.contains("sample_sources"))
        opts.sample_sources = sec.at("sample_sources").get<uint32_t>();
    if (sec.contains("seed")) opts.seed = sec.at("seed").get<uint64_t>();
    if (sec.contains("centralities"))
        opts.centralities = sec.at("centralities").get<bool>() ? 1 : 0;
    if (sec.contains("eigen_tol")) opts.eigen_tol = sec.at("eigen_tol").get<double>();
    if (sec.contains("eigen_max_iter"))
        opts.eigen_max_iter = sec.at("eigen_max_iter").get<uint32_t>();
    return opts;
}

// Full parameter snapshot, for manifests and best-config output.
json params_to_json(const sng_params* params) {
    json dynamics, rules;
    auto get = [&](const char* key) {
        double v = 0.0;
        check(sng_params_get(params, key, &v), kExitRuntime);
        return v;
    };
    dynamics["nu"] = get("nu");
    dynamics["psi"] = get("psi");
    dynamics["kappa"] = static_cast<uint64_t>(get("kappa"));
    dynamics["n0"] = static_cast<uint64_t>(get("n0"));
    dynamics["target_nodes"] = static_cast<uint64_t>(get("target_nodes"));
    dynamics["seed"] = static_cast<uint64_t>(get("seed"));
    rules["p_random"] = get("p_random");
    rules["p_triadic"] = get("p_triadic");
    rules["p_cumulative"] = get("p_cumulative");
    rules["p_distance"] = get("p_distance");
    rules["top_k"] = static_cast<uint64_t>(get("top_k"));
    rules["distance_check"] = get("distance_check") != 0.0;
    rules["budget_split"] = {get("budget_split_1"), get("budget_split_2"),
                             get("budget_split_3"), get("budget_split_4")};
    return json{{"dynamics", dynamics}, {"rules", rules}};
}

json metrics_options_to_json(const sng_metrics_options& opts) {
    return json{{"exact_threshold", opts.exact_threshold},
                {"sample_sources", opts.sample_sources},
                {"seed", opts.seed},
                {"centralities", opts.centralities != 0},
                {"eigen_tol", opts.eigen_tol},
                {"eigen_max_iter", opts.eigen_max_iter}};
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) die(kExitRuntime, "cannot create output directory " + dir + ": " + ec.message());
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) die(kExitRuntime, "cannot write " + path);
    out << content;
}

void write_metric_artifacts(const sng_graph* graph, const sng_metrics* metrics,
                            const std::string& dir, bool centralities) {
    check(sng_metrics_write_report(metrics, (dir + "/metrics.txt").c_str()), kExitRuntime);
    check(sng_graph_write_degree_loglog(graph, "in", 0, (dir + "/indegree_loglog.csv").c_str()), kExitRuntime);
    check(sng_graph_write_degree_loglog(graph, "out", 0, (dir + "/outdegree_loglog.csv").c_str()), kExitRuntime);
    if (centralities) {
        for (const char* which : {"eigenvector", "betweenness", "closeness"}) {
            std::string path = dir + "/" + which + ".csv";
            check(sng_metrics_write_centrality_csv(metrics, which, path.c_str()), kExitRuntime);
        }
    }
}

// ---- grow ----

int cmd_grow(const std::string& config_path, int64_t seed_override,
             int64_t target_override, const std::string& out_dir_flag) {
    json cfg = config_path.empty() ? json::object() : load_json(config_path, kExitConfig);

    ParamsHandle params(sng_params_new());
    apply_config(params.get(), cfg);
    if (seed_override >= 0)
        check(sng_params_set(params.get(), "seed", static_cast<double>(seed_override)), kExitConfig);
    if (target_override >= 0)
        check(sng_params_set(params.get(), "target_nodes", static_cast<double>(target_override)), kExitConfig);
    check(sng_params_validate(params.get()), kExitConfig);

    std::string out_dir = !out_dir_flag.empty() ? out_dir_flag
                          : cfg.contains("output") && cfg["output"].contains("dir")
                              ? cfg["output"]["dir"].get<std::string>()
                              : "out";
    ensure_out_dir(out_dir);

    auto t0 = std::chrono::steady_clock::now();
    SimHandle sim;
    check(sng_simulate(params.get(), sim.out()), kExitRuntime);
    auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0).count();

    const sng_graph* graph = sng_sim_graph(sim.get());
    log_info("grew " + std::to_string(sng_graph_nodes(graph)) + " nodes, " +
             std::to_string(sng_graph_edges(graph)) + " edges in " +
             std::to_string(wall_ms) + " ms");

    check(sng_graph_write(graph, (out_dir + "/edges.txt").c_str()), kExitRuntime);
    check(sng_sim_write_turns_csv(sim.get(), (out_dir + "/turns.csv").c_str()), kExitRuntime);

    sng_metrics_options mopts = metrics_options_from_config(cfg);
    MetricsHandle metrics;
    check(sng_metrics_compute(graph, &mopts, metrics.out()), kExitRuntime);
    write_metric_artifacts(graph, metrics.get(), out_dir, mopts.centralities != 0);

    json manifest = params_to_json(params.get());
    manifest["metrics"] = metrics_options_to_json(mopts);
    manifest["version"] = sng_version();
    manifest["wall_time_ms"] = wall_ms;
    manifest["turns"] = sng_sim_turns(sim.get());
    write_text(out_dir + "/manifest.json", manifest.dump(2) + "\n");
    return kExitOk;
}

// ---- metrics ----

GraphHandle load_graph_or_die(const std::string& path) {
    GraphHandle g;
    sng_status st = sng_graph_load(path.c_str(), g.out());
    // missing file (3) and malformed content (4) exit distinctly
    if (st == SNG_ERR_IO) die(kExitInput, sng_last_error());
    if (st == SNG_ERR_PARSE) die(kExitRuntime, path + ": " + sng_last_error());
    check(st, kExitRuntime);
    return g;
}

int cmd_metrics(const std::string& edge_path, const std::string& config_path,
                const std::string& out_dir) {
    json cfg = config_path.empty() ? json::object() : load_json(config_path, kExitConfig);
    GraphHandle graph = load_graph_or_die(edge_path);
    ensure_out_dir(out_dir);

    sng_metrics_options mopts = metrics_options_from_config(cfg);
    MetricsHandle metrics;
    check(sng_metrics_compute(graph.get(), &mopts, metrics.out()), kExitRuntime);
    write_metric_artifacts(graph.get(), metrics.get(), out_dir, mopts.centralities != 0);
    log_info("metrics written to " + out_dir + "/metrics.txt");
    return kExitOk;
}

// ---- compare ----

int cmd_compare(const std::string& left_path, const std::string& right_path,
                std::vector<double> weights, const std::string& config_path,
                const std::string& out_dir) {
    json cfg = config_path.empty() ? json::object() : load_json(config_path, kExitConfig);
    if (weights.empty()) weights.assign(6, 1.0);
    if (weights.size() != 6) die(kExitConfig, "--weights needs exactly 6 values");

    GraphHandle left = load_graph_or_die(left_path);
    GraphHandle right = load_graph_or_die(right_path);
    ensure_out_dir(out_dir);

    sng_metrics_options mopts = metrics_options_from_config(cfg);
    MetricsHandle lm, rm;
    check(sng_metrics_compute(left.get(), &mopts, lm.out()), kExitRuntime);
    check(sng_metrics_compute(right.get(), &mopts, rm.out()), kExitRuntime);

    ComparisonHandle cmp;
    check(sng_compare(lm.get(), rm.get(), weights.data(), cmp.out()), kExitRuntime);
    check(sng_comparison_write(cmp.get(), (out_dir + "/comparison.csv").c_str()), kExitRuntime);
    std::cout << "objective = " << sng_comparison_objective(cmp.get()) << '\n';
    return kExitOk;
}

// ---- baseline ----

int cmd_baseline(const std::string& kind, uint64_t n, double p, uint64_t m,
                 uint64_t seed, const std::string& out_path) {
    GraphHandle g;
    if (kind == "erdos_renyi") {
        check(sng_baseline_erdos_renyi(n, p, seed, g.out()), kExitConfig);
    } else if (kind == "pref_attach") {
        check(sng_baseline_pref_attach(n, m, seed, g.out()), kExitConfig);
    } else {
        die(kExitConfig, "unknown baseline kind: " + kind);
    }
    check(sng_graph_write(g.get(), out_path.c_str()), kExitRuntime);
    log_info(kind + ": " + std::to_string(sng_graph_nodes(g.get())) + " nodes, " +
             std::to_string(sng_graph_edges(g.get())) + " edges -> " + out_path);
    return kExitOk;
}

// ---- sweep ----

struct SweepPoint {
    uint64_t index = 0;
    std::map<std::string, double> values;
    double objective = -1.0;
    uint64_t seed = 0;
    bool failed = false;
    std::string error;
};

int cmd_sweep(const std::string& spec_path, int threads_flag,
              const std::string& out_dir_flag) {
    json spec = load_json(spec_path, kExitConfig);
    if (!spec.contains("grid") || !spec["grid"].is_object() || spec["grid"].empty())
        die(kExitConfig, "sweep spec needs a non-empty grid object");
    if (!spec.contains("target")) die(kExitConfig, "sweep spec needs a target edge list");

    json base = spec.value("base", json::object());
    std::string out_dir = !out_dir_flag.empty() ? out_dir_flag : spec.value("out_dir", "sweep_out");
    ensure_out_dir(out_dir);

    // grid keys in sorted order so point indexing is stable
    std::vector<std::string> keys;
    std::vector<std::vector<double>> values;
    for (auto& [key, arr] : spec["grid"].items()) {
        if (!arr.is_array() || arr.empty())
            die(kExitConfig, "grid." + key + " must be a non-empty array");
        keys.push_back(key);
        std::vector<double> vs;
        for (const auto& v : arr) vs.push_back(as_number(v, key));
        values.push_back(std::move(vs));
    }

    uint64_t total = 1;
    for (const auto& vs : values) total *= vs.size();
    uint64_t max_eval = spec.value("max_evaluations", total);
    if (max_eval < 1) die(kExitConfig, "max_evaluations must be >= 1");
    uint64_t count = std::min(total, max_eval);

    std::vector<double> weights = spec.value("weights", std::vector<double>(6, 1.0));
    if (weights.size() != 6) die(kExitConfig, "weights needs exactly 6 values");

    uint64_t master_seed = 1;
    {
        ParamsHandle probe(sng_params_new());
        apply_config(probe.get(), base);
        double s = 1;
        sng_params_get(probe.get(), "seed", &s);
        master_seed = static_cast<uint64_t>(s);
    }
    bool fixed_seed = spec.value("fixed_seed", false);

    // target metrics computed once with the shared settings
    sng_metrics_options mopts = metrics_options_from_config(base);
    GraphHandle target = load_graph_or_die(spec["target"].get<std::string>());
    MetricsHandle target_metrics;
    check(sng_metrics_compute(target.get(), &mopts, target_metrics.out()), kExitRuntime);

    std::vector<SweepPoint> points(count);
    for (uint64_t idx = 0; idx < count; ++idx) {
        points[idx].index = idx;
        uint64_t rem = idx;
        for (size_t k = 0; k < keys.size(); ++k) {
            points[idx].values[keys[k]] = values[k][rem % values[k].size()];
            rem /= values[k].size();
        }
        points[idx].seed = fixed_seed ? master_seed : sng_derive_seed(master_seed, idx);
    }

    int threads = threads_flag > 0 ? threads_flag : spec.value("threads", 1);
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            uint64_t idx = next.fetch_add(1);
            if (idx >= count) return;
            SweepPoint& pt = points[idx];
            ParamsHandle params(sng_params_new());
            try {
                apply_config(params.get(), base);
                for (const auto& [key, value] : pt.values)
                    check(sng_params_set(params.get(), key.c_str(), value), kExitConfig);
                check(sng_params_set(params.get(), "seed", static_cast<double>(pt.seed)), kExitConfig);
                check(sng_params_validate(params.get()), kExitConfig);

                SimHandle sim;
                check(sng_simulate(params.get(), sim.out()), kExitRuntime);
                MetricsHandle metrics;
                check(sng_metrics_compute(sng_sim_graph(sim.get()), &mopts, metrics.out()), kExitRuntime);
                ComparisonHandle cmp;
                check(sng_compare(target_metrics.get(), metrics.get(), weights.data(), cmp.out()), kExitRuntime);
                pt.objective = sng_comparison_objective(cmp.get());
            } catch (const CliError& e) {
                pt.failed = true;
                pt.error = e.message;
            }
        }
    };
    {
        std::vector<std::thread> pool;
        for (int i = 0; i < std::max(1, threads); ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<const SweepPoint*> ranked;
    for (const auto& pt : points) ranked.push_back(&pt);
    std::sort(ranked.begin(), ranked.end(), [](const SweepPoint* a, const SweepPoint* b) {
        if (a->failed != b->failed) return !a->failed;
        if (a->objective != b->objective) return a->objective < b->objective;
        return a->index < b->index;
    });

    std::ostringstream csv;
    csv << "rank,point,objective,seed";
    for (const auto& k : keys) csv << ',' << k;
    csv << ",status\n";
    for (size_t rank = 0; rank < ranked.size(); ++rank) {
        const SweepPoint& pt = *ranked[rank];
        csv << rank + 1 << ',' << pt.index << ','
            << (pt.failed ? std::string("nan") : std::to_string(pt.objective)) << ','
            << pt.seed;
        for (const auto& k : keys) csv << ',' << pt.values.at(k);
        csv << ',' << (pt.failed ? "failed: " + pt.error : "ok") << '\n';
    }
    write_text(out_dir + "/sweep_results.csv", csv.str());

    const SweepPoint& best = *ranked.front();
    if (!best.failed) {
        ParamsHandle params(sng_params_new());
        apply_config(params.get(), base);
        for (const auto& [key, value] : best.values)
            check(sng_params_set(params.get(), key.c_str(), value), kExitConfig);
        check(sng_params_set(params.get(), "seed", static_cast<double>(best.seed)), kExitConfig);
        json best_cfg = params_to_json(params.get());
        best_cfg["metrics"] = metrics_options_to_json(mopts);
        best_cfg["objective"] = best.objective;
        write_text(out_dir + "/best_config.json", best_cfg.dump(2) + "\n");
        std::cout << "best objective = " << best.objective << " (point " << best.index << ")\n";
    } else {
        std::cout << "all sweep points failed\n";
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bottom-up social network growth simulator"};
    app.require_subcommand(1);

    // grow
    auto* grow = app.add_subcommand("grow", "Run a simulation and write artifacts");
    std::string grow_config, grow_out;
    int64_t grow_seed = -1, grow_target = -1;
    grow->add_option("--config", grow_config, "JSON config file");
    grow->add_option("--seed", grow_seed, "Override RNG seed");
    grow->add_option("--target-nodes", grow_target, "Override stop condition");
    grow->add_option("--out-dir", grow_out, "Output directory");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Compute a metrics report for an edge list");
    std::string metrics_input, metrics_config, metrics_out = "metrics_out";
    metrics->add_option("input", metrics_input, "Edge list path")->required();
    metrics->add_option("--config", metrics_config, "JSON config file (metrics section)");
    metrics->add_option("--out-dir", metrics_out, "Output directory");

    // compare
    auto* compare = app.add_subcommand("compare", "Compare two networks' summary metrics");
    std::string cmp_left, cmp_right, cmp_config, cmp_out = "compare_out";
    std::vector<double> cmp_weights;
    compare->add_option("left", cmp_left, "Reference edge list")->required();
    compare->add_option("right", cmp_right, "Candidate edge list")->required();
    compare->add_option("--weights", cmp_weights, "Six objective weights")->expected(6);
    compare->add_option("--config", cmp_config, "JSON config file (metrics section)");
    compare->add_option("--out-dir", cmp_out, "Output directory");

    // baseline
    auto* baseline = app.add_subcommand("baseline", "Generate a null-model network");
    std::string base_kind, base_out = "baseline.txt";
    uint64_t base_n = 1000, base_m = 2, base_seed = 1;
    double base_p = 0.01;
    baseline->add_option("--kind", base_kind, "erdos_renyi | pref_attach")->required();
    baseline->add_option("--n", base_n, "Target node count");
    baseline->add_option("--p", base_p, "Edge probability (erdos_renyi)");
    baseline->add_option("--m", base_m, "Edges per entrant (pref_attach)");
    baseline->add_option("--seed", base_seed, "RNG seed");
    baseline->add_option("--out", base_out, "Output edge list path");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Grid-search calibration against a target network");
    std::string sweep_spec, sweep_out;
    int sweep_threads = 0;
    sweep->add_option("--spec", sweep_spec, "Sweep spec JSON")->required();
    sweep->add_option("--threads", sweep_threads, "Parallel evaluations");
    sweep->add_option("--out-dir", sweep_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (grow->parsed()) return cmd_grow(grow_config, grow_seed, grow_target, grow_out);
        if (metrics->parsed()) return cmd_metrics(metrics_input, metrics_config, metrics_out);
        if (compare->parsed())
            return cmd_compare(cmp_left, cmp_right, cmp_weights, cmp_config, cmp_out);
        if (baseline->parsed())
            return cmd_baseline(base_kind, base_n, base_p, base_m, base_seed, base_out);
        if (sweep->parsed()) return cmd_sweep(sweep_spec, sweep_threads, sweep_out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}
