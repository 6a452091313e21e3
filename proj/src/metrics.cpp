#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "rng.hpp"

namespace socnet {

namespace {

// Seeded Fisher-Yates; k = ids.size() gives a full shuffle.
std::vector<NodeId> sample_without_replacement(std::vector<NodeId> ids,
                                               uint64_t k, Rng& rng) {
    for (uint64_t i = 0; i < k && i + 1 < ids.size(); ++i) {
        uint64_t j = i + rng.uniform_index(ids.size() - i);
        std::swap(ids[i], ids[j]);
    }
    ids.resize(std::min<uint64_t>(k, ids.size()));
    return ids;
}

// Single-source BFS distances; UINT32_MAX marks unreachable.
void bfs(const UndirectedView& u, NodeId src, std::vector<uint32_t>& dist) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    dist[src] = 0;
    std::queue<NodeId> q;
    q.push(src);
    while (!q.empty()) {
        NodeId v = q.front();
        q.pop();
        for (NodeId w : u.adj[v]) {
            if (dist[w] == UINT32_MAX) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
}

} // namespace

UndirectedView undirected_projection(const DirectedGraph& g) {
    UndirectedView u;
    u.adj.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (NodeId w : g.neighbors_out(v)) {
            if (v < w || !g.has_edge(w, v)) { // collapse reciprocal pairs
                u.adj[v].push_back(w);
                u.adj[w].push_back(v);
                ++u.edge_count;
            }
        }
    }
    return u;
}

DegreeHistogram degree_histogram(const DirectedGraph& g, Direction dir) {
    DegreeHistogram hist;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        uint64_t d = 0;
        switch (dir) {
            case Direction::In: d = g.in_degree(v); break;
            case Direction::Out: d = g.out_degree(v); break;
            case Direction::Total: d = g.in_degree(v) + g.out_degree(v); break;
        }
        ++hist[d];
    }
    return hist;
}

std::vector<std::vector<NodeId>> weakly_connected_components(const UndirectedView& u) {
    std::vector<std::vector<NodeId>> comps;
    std::vector<bool> seen(u.node_count(), false);
    for (NodeId s = 0; s < u.node_count(); ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp{s};
        seen[s] = true;
        for (size_t i = 0; i < comp.size(); ++i) {
            for (NodeId w : u.adj[comp[i]]) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return comps;
}

PathSummary diameter_and_apl(const UndirectedView& u, uint64_t exact_threshold,
                             uint32_t sample_sources, uint64_t seed) {
    PathSummary out;
    if (u.node_count() == 0) return out;
    auto comps = weakly_connected_components(u);
    const auto& lwcc = comps.front();
    out.lwcc_size = lwcc.size();
    if (lwcc.size() <= 1) return out;

    std::vector<NodeId> sources = lwcc;
    if (lwcc.size() > exact_threshold) {
        Rng rng(seed);
        sources = sample_without_replacement(sources, sample_sources, rng);
        out.sampled = true;
    }

    std::vector<uint32_t> dist(u.node_count());
    uint64_t max_dist = 0;
    double dist_sum = 0.0;
    uint64_t pair_count = 0;
    for (NodeId s : sources) {
        bfs(u, s, dist);
        for (NodeId t : lwcc) {
            if (t == s) continue;
            max_dist = std::max<uint64_t>(max_dist, dist[t]);
            dist_sum += dist[t];
            ++pair_count;
        }
    }
    out.diameter = max_dist;
    out.avg_path_length = pair_count ? dist_sum / static_cast<double>(pair_count) : 0.0;
    return out;
}

EigenvectorResult eigenvector_centrality(const UndirectedView& u, double tol,
                                         uint32_t max_iter) {
    EigenvectorResult out;
    uint64_t n = u.node_count();
    out.scores.assign(n, 0.0);
    if (u.edge_count == 0) return out; // warning flag stays unset

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> next(n, 0.0);
    for (uint32_t it = 0; it < max_iter; ++it) {
        for (uint64_t v = 0; v < n; ++v) {
            double sum = x[v]; // identity shift
            for (NodeId w : u.adj[v]) sum += x[w];
            next[v] = sum;
        }
        double norm = std::sqrt(std::inner_product(next.begin(), next.end(),
                                                   next.begin(), 0.0));
        if (norm == 0.0) break;
        double gap = 0.0;
        for (uint64_t v = 0; v < n; ++v) {
            next[v] /= norm;
            gap = std::max(gap, std::abs(next[v] - x[v]));
        }
        x.swap(next);
        if (gap < tol) {
            out.converged = true;
            break;
        }
    }
    out.scores = std::move(x);
    return out;
}

std::vector<double> betweenness(const UndirectedView& u, uint64_t sample_k,
                                uint64_t seed) {
    uint64_t n = u.node_count();
    std::vector<double> score(n, 0.0);
    if (n == 0) return score;

    std::vector<NodeId> sources(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
    double scale = 1.0;
    if (sample_k > 0 && sample_k < n) {
        Rng rng(seed);
        sources = sample_without_replacement(sources, sample_k, rng);
        scale = static_cast<double>(n) / static_cast<double>(sample_k);
    }

    std::vector<uint32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<std::vector<NodeId>> preds(n);

    for (NodeId s : sources) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::queue<NodeId> q;
        q.push(s);
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop();
            order.push_back(v);
            for (NodeId w : u.adj[v]) {
                if (dist[w] == UINT32_MAX) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId v : preds[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }
    // halve source-summed counts to unordered pairs
    for (double& v : score) v *= scale * 0.5;
    return score;
}

std::vector<double> closeness(const UndirectedView& u) {
    uint64_t n = u.node_count();
    std::vector<double> score(n, 0.0);
    std::vector<uint32_t> dist(n);
    for (NodeId v = 0; v < n; ++v) {
        if (u.adj[v].empty()) continue;
        bfs(u, v, dist);
        uint64_t reachable = 0;
        double sum = 0.0;
        for (uint64_t w = 0; w < n; ++w) {
            if (w != v && dist[w] != UINT32_MAX) {
                ++reachable;
                sum += dist[w];
            }
        }
        if (reachable > 0 && sum > 0.0)
            score[v] = static_cast<double>(reachable) / sum;
    }
    return score;
}

MetricsReport compute_metrics(const DirectedGraph& g, const MetricsOptions& opts) {
    MetricsReport r;
    r.settings = opts;
    r.nodes = g.node_count();
    r.edges = g.edge_count();
    r.avg_degree = r.nodes ? static_cast<double>(r.edges) / static_cast<double>(r.nodes) : 0.0;
    if (r.nodes == 0) return r;

    UndirectedView u = undirected_projection(g);
    PathSummary paths = diameter_and_apl(u, opts.exact_threshold,
                                         opts.sample_sources, opts.seed);
    r.diameter = paths.diameter;
    r.avg_path_length = paths.avg_path_length;
    r.paths_sampled = paths.sampled;

    if (u.edge_count > 0) {
        auto mod = louvain(u, opts.seed);
        r.modularity = mod.q;
        r.modularity_defined = true;
    }

    if (opts.centralities) {
        auto eig = eigenvector_centrality(u, opts.eigen_tol, opts.eigen_max_iter);
        r.eigenvector_scores = std::move(eig.scores);
        r.eigen_converged = eig.converged;

        bool big = r.nodes > opts.exact_threshold;
        r.betweenness_sampled = big;
        r.betweenness_scores = betweenness(u, big ? opts.sample_sources : 0,
                                           opts.seed);

        if (big) {
            // closeness on a uniform node sample only; unsampled nodes stay 0
            r.closeness_sampled = true;
            r.closeness_scores.assign(r.nodes, 0.0);
            std::vector<NodeId> ids(r.nodes);
            std::iota(ids.begin(), ids.end(), NodeId{0});
            Rng rng(opts.seed + 1);
            auto picks = sample_without_replacement(std::move(ids),
                                                    opts.sample_sources, rng);
            std::vector<uint32_t> dist(r.nodes);
            for (NodeId v : picks) {
                if (u.adj[v].empty()) continue;
                bfs(u, v, dist);
                uint64_t reachable = 0;
                double sum = 0.0;
                for (uint64_t w = 0; w < r.nodes; ++w) {
                    if (w != v && dist[w] != UINT32_MAX) {
                        ++reachable;
                        sum += dist[w];
                    }
                }
                if (reachable > 0 && sum > 0.0)
                    r.closeness_scores[v] = static_cast<double>(reachable) / sum;
            }
        } else {
            r.closeness_scores = closeness(u);
        }
    }
    return r;
}

} // namespace socnet
