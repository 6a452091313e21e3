#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"

namespace socnet {

struct RuleOutcome {
    uint64_t attempts = 0;
    uint64_t successes = 0;
    uint64_t actions_consumed = 0;
};

// Per-turn cap on edges created by any single node. Attempts blocked by the
// cap still count as failed attempts at the rule level.
class TurnEdgeCap {
public:
    TurnEdgeCap(uint64_t node_count, uint32_t kappa)
        : created_(node_count, 0), kappa_(kappa) {}

    bool allows(NodeId v) const { return created_[v] < kappa_; }
    void record(NodeId v) { ++created_[v]; }
    uint32_t created(NodeId v) const { return created_[v]; }

private:
    std::vector<uint32_t> created_;
    uint32_t kappa_;
};

// Entrants get one shot each at linking to a uniformly random node that
// predates them. Success costs 2 actions, failure 1. Entrants must be the
// trailing block of node ids (how the scheduler creates them).
RuleOutcome rule_randomness(DirectedGraph& g, std::span<const NodeId> entrants,
                            uint64_t budget, double p, Rng& rng,
                            TurnEdgeCap* cap = nullptr);

// Ego links to a uniformly chosen out-neighbor of one of its out-neighbors.
// Success costs 3 actions, failure 1.
RuleOutcome rule_triadic(DirectedGraph& g, uint64_t budget, double p, Rng& rng,
                         TurnEdgeCap* cap = nullptr);

// Two distinct random nodes (a, b); a links to b only when b has strictly
// higher in-degree. Success costs 2 actions, failure 1.
RuleOutcome rule_cumulative(DirectedGraph& g, uint64_t budget, double p,
                            Rng& rng, TurnEdgeCap* cap = nullptr);

// Random node links to one of the current top_k in-degree nodes, optionally
// only when that node is within undirected distance 2. Success costs 2
// actions, failure 1. The top list is computed once per invocation.
RuleOutcome rule_distance_closure(DirectedGraph& g, uint64_t budget, double p,
                                  uint32_t top_k, bool distance_check,
                                  Rng& rng, TurnEdgeCap* cap = nullptr);

// Top k nodes by in-degree, ties broken by lower id.
std::vector<NodeId> top_in_degree(const DirectedGraph& g, uint32_t k);

// True when dst is within undirected distance 2 of src.
bool within_distance_two(const DirectedGraph& g, NodeId src, NodeId dst);

} // namespace socnet
