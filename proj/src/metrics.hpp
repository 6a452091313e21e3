#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "graph.hpp"

namespace socnet {

// Undirected projection of a digraph: duplicate directed pairs collapse to
// one undirected edge. All path, community and centrality measures run on
// this view; degree histograms stay directed.
struct UndirectedView {
    std::vector<std::vector<NodeId>> adj;
    uint64_t edge_count = 0;

    uint64_t node_count() const { return adj.size(); }
};

UndirectedView undirected_projection(const DirectedGraph& g);

enum class Direction { In, Out, Total };

using DegreeHistogram = std::map<uint64_t, uint64_t>;

DegreeHistogram degree_histogram(const DirectedGraph& g, Direction dir);

struct PathSummary {
    uint64_t diameter = 0;
    double avg_path_length = 0.0;
    uint64_t lwcc_size = 0;
    bool sampled = false;
};

// BFS over the largest weakly connected component. Exact all-sources up to
// exact_threshold nodes, uniform source sampling above it.
PathSummary diameter_and_apl(const UndirectedView& u,
                             uint64_t exact_threshold = 20000,
                             uint32_t sample_sources = 512, uint64_t seed = 1);

// Node sets of weakly connected components, largest first.
std::vector<std::vector<NodeId>> weakly_connected_components(const UndirectedView& u);

double modularity_of_partition(const UndirectedView& u,
                               std::span<const uint32_t> partition);

struct ModularityResult {
    double q = 0.0;
    std::vector<uint32_t> partition;
};

// Louvain community detection; node visit order is shuffled by the seed, so
// results are reproducible per seed. Throws on edgeless input.
ModularityResult louvain(const UndirectedView& u, uint64_t seed);

struct EigenvectorResult {
    std::vector<double> scores;
    bool converged = false;
};

// Power iteration on the projected adjacency (shifted by the identity so
// bipartite structures cannot oscillate). L2-normalized output.
EigenvectorResult eigenvector_centrality(const UndirectedView& u,
                                         double tol = 1e-9,
                                         uint32_t max_iter = 1000);

// Brandes betweenness, unnormalized unordered-pair counts. sample_k = 0 runs
// every source (exact); otherwise k distinct uniform pivots scaled by n/k.
std::vector<double> betweenness(const UndirectedView& u, uint64_t sample_k = 0,
                                uint64_t seed = 1);

// Classical closeness (reachable-1)/sum-of-distances within each node's
// component; isolated nodes score 0.
std::vector<double> closeness(const UndirectedView& u);

struct MetricsOptions {
    uint64_t exact_threshold = 20000;
    uint32_t sample_sources = 512;
    uint64_t seed = 1;
    bool centralities = true;
    double eigen_tol = 1e-9;
    uint32_t eigen_max_iter = 1000;

    bool operator==(const MetricsOptions&) const = default;
};

struct MetricsReport {
    uint64_t nodes = 0;
    uint64_t edges = 0;
    double avg_degree = 0.0; // |E| / n, directed convention
    uint64_t diameter = 0;
    double avg_path_length = 0.0;
    double modularity = 0.0;
    bool modularity_defined = false;
    bool paths_sampled = false;
    bool betweenness_sampled = false;
    bool closeness_sampled = false;
    bool eigen_converged = false;
    std::vector<double> eigenvector_scores;
    std::vector<double> betweenness_scores;
    std::vector<double> closeness_scores;
    MetricsOptions settings;
};

// Full summary report. Above exact_threshold nodes, betweenness uses
// sample_sources pivots and closeness is evaluated on sample_sources sampled
// nodes only (others report 0, flagged sampled).
MetricsReport compute_metrics(const DirectedGraph& g,
                              const MetricsOptions& opts = {});

} // namespace socnet
