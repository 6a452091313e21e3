#include "baselines.hpp"

#include <stdexcept>
#include <vector>

namespace socnet {

DirectedGraph generate_erdos_renyi(uint64_t n, double p, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("erdos_renyi requires n >= 2");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in [0,1]");
    DirectedGraph g;
    for (uint64_t i = 0; i < n; ++i) g.add_node(0);
    Rng rng(seed);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (i != j && rng.bernoulli(p)) g.add_edge(i, j);
    return g;
}

DirectedGraph generate_pref_attach(uint64_t n, uint64_t m, uint64_t seed) {
    if (m < 1) throw std::invalid_argument("pref_attach requires m >= 1");
    if (n <= m + 1) throw std::invalid_argument("pref_attach requires n > m+1");
    DirectedGraph g;
    for (uint64_t i = 0; i < m + 1; ++i) g.add_node(0);

    // endpoint list holds one entry per unit of total degree
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * n * m);
    for (NodeId i = 0; i <= m; ++i) {
        for (NodeId j = static_cast<NodeId>(i + 1); j <= m; ++j) {
            g.add_edge(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }

    Rng rng(seed);
    std::vector<NodeId> picked;
    picked.reserve(m);
    while (g.node_count() < n) {
        NodeId entrant = g.add_node(0);
        picked.clear();
        while (picked.size() < m) {
            NodeId target = endpoints[rng.uniform_index(endpoints.size())];
            bool dup = false;
            for (NodeId t : picked) dup |= (t == target);
            if (!dup) picked.push_back(target);
        }
        for (NodeId t : picked) {
            g.add_edge(entrant, t);
            endpoints.push_back(entrant);
            endpoints.push_back(t);
        }
    }
    return g;
}

} // namespace socnet
