#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metrics.hpp"
#include "rng.hpp"

namespace socnet {

namespace {

// Aggregated weighted graph for one Louvain level. Weights double on each
// aggregation; self_w holds intra-community weight folded into a node.
struct LevelGraph {
    std::vector<std::vector<std::pair<uint32_t, double>>> adj;
    std::vector<double> self_w;
    std::vector<double> wdeg; // includes 2 * self_w
    double total_weight = 0.0; // 2m

    uint64_t size() const { return adj.size(); }
};

LevelGraph from_view(const UndirectedView& u) {
    LevelGraph g;
    g.adj.resize(u.node_count());
    g.self_w.assign(u.node_count(), 0.0);
    g.wdeg.assign(u.node_count(), 0.0);
    for (uint32_t v = 0; v < u.node_count(); ++v) {
        for (NodeId w : u.adj[v]) g.adj[v].emplace_back(w, 1.0);
        g.wdeg[v] = static_cast<double>(u.adj[v].size());
        g.total_weight += g.wdeg[v];
    }
    return g;
}

// One local-moving phase. Returns true when at least one node changed
// community.
bool one_level(const LevelGraph& g, Rng& rng, std::vector<uint32_t>& comm) {
    uint64_t n = g.size();
    comm.resize(n);
    std::iota(comm.begin(), comm.end(), 0u);
    std::vector<double> comm_tot(g.wdeg);

    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (uint64_t i = 0; i + 1 < n; ++i) {
        uint64_t j = i + rng.uniform_index(n - i);
        std::swap(order[i], order[j]);
    }

    std::vector<double> neigh_w(n, 0.0);
    std::vector<uint32_t> neigh_comms;
    bool any_move = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (uint32_t v : order) {
            uint32_t old_c = comm[v];
            neigh_comms.clear();
            for (auto [w, weight] : g.adj[v]) {
                if (w == v) continue;
                uint32_t c = comm[w];
                if (neigh_w[c] == 0.0) neigh_comms.push_back(c);
                neigh_w[c] += weight;
            }
            comm_tot[old_c] -= g.wdeg[v];

            double best_gain = neigh_w[old_c] - g.wdeg[v] * comm_tot[old_c] / g.total_weight;
            uint32_t best_c = old_c;
            for (uint32_t c : neigh_comms) {
                double gain = neigh_w[c] - g.wdeg[v] * comm_tot[c] / g.total_weight;
                if (gain > best_gain + 1e-12 ||
                    (std::abs(gain - best_gain) <= 1e-12 && c < best_c)) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            comm_tot[best_c] += g.wdeg[v];
            comm[v] = best_c;
            if (best_c != old_c) {
                moved = true;
                any_move = true;
            }
            for (uint32_t c : neigh_comms) neigh_w[c] = 0.0;
        }
    }
    return any_move;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<uint32_t>& comm,
                     std::vector<uint32_t>& renumber) {
    uint64_t n = g.size();
    renumber.assign(n, UINT32_MAX);
    uint32_t next = 0;
    for (uint64_t v = 0; v < n; ++v) {
        uint32_t c = comm[v];
        if (renumber[c] == UINT32_MAX) renumber[c] = next++;
    }

    LevelGraph out;
    out.adj.resize(next);
    out.self_w.assign(next, 0.0);
    out.wdeg.assign(next, 0.0);
    out.total_weight = g.total_weight;

    std::vector<double> acc(next, 0.0);
    std::vector<uint32_t> touched;
    std::vector<std::vector<uint32_t>> members(next);
    for (uint32_t v = 0; v < n; ++v) members[renumber[comm[v]]].push_back(v);

    for (uint32_t nc = 0; nc < next; ++nc) {
        touched.clear();
        double self_acc = 0.0;
        for (uint32_t v : members[nc]) {
            self_acc += g.self_w[v];
            for (auto [w, weight] : g.adj[v]) {
                uint32_t wc = renumber[comm[w]];
                if (wc == nc) {
                    self_acc += weight * 0.5; // each intra edge seen twice
                } else {
                    if (acc[wc] == 0.0) touched.push_back(wc);
                    acc[wc] += weight;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (uint32_t wc : touched) {
            out.adj[nc].emplace_back(wc, acc[wc]);
            acc[wc] = 0.0;
        }
        out.self_w[nc] = self_acc;
        double deg = 2.0 * self_acc;
        for (auto [w, weight] : out.adj[nc]) {
            (void)w;
            deg += weight;
        }
        out.wdeg[nc] = deg;
    }
    return out;
}

} // namespace

double modularity_of_partition(const UndirectedView& u,
                               std::span<const uint32_t> partition) {
    if (u.edge_count == 0)
        throw std::invalid_argument("modularity undefined on edgeless graph");
    double two_m = 2.0 * static_cast<double>(u.edge_count);
    uint32_t max_c = *std::max_element(partition.begin(), partition.end());
    std::vector<double> deg_sum(max_c + 1, 0.0);
    double intra = 0.0; // both directions of each intra edge
    for (uint32_t v = 0; v < u.node_count(); ++v) {
        deg_sum[partition[v]] += static_cast<double>(u.adj[v].size());
        for (NodeId w : u.adj[v])
            if (partition[v] == partition[w]) intra += 1.0;
    }
    double q = intra / two_m;
    for (double d : deg_sum) q -= (d / two_m) * (d / two_m);
    return q;
}

ModularityResult louvain(const UndirectedView& u, uint64_t seed) {
    if (u.edge_count == 0)
        throw std::invalid_argument("modularity undefined on edgeless graph");

    Rng rng(seed);
    LevelGraph g = from_view(u);

    std::vector<uint32_t> node_to_comm(u.node_count());
    std::iota(node_to_comm.begin(), node_to_comm.end(), 0u);

    while (true) {
        std::vector<uint32_t> comm;
        bool improved = one_level(g, rng, comm);
        std::vector<uint32_t> renumber;
        LevelGraph next = aggregate(g, comm, renumber);
        for (uint32_t& c : node_to_comm) c = renumber[comm[c]];
        if (!improved || next.size() == g.size()) break;
        g = std::move(next);
    }

    ModularityResult out;
    out.partition = std::move(node_to_comm);
    out.q = modularity_of_partition(u, out.partition);
    return out;
}

} // namespace socnet
