#include "rules.hpp"

#include <algorithm>
#include <numeric>

namespace socnet {

namespace {

constexpr uint64_t kFailCost = 1;

bool cap_allows(const TurnEdgeCap* cap, NodeId v) {
    return cap == nullptr || cap->allows(v);
}

void cap_record(TurnEdgeCap* cap, NodeId v) {
    if (cap) cap->record(v);
}

void note_success(RuleOutcome& out, uint64_t cost) {
    ++out.successes;
    out.actions_consumed += cost;
}

} // namespace

RuleOutcome rule_randomness(DirectedGraph& g, std::span<const NodeId> entrants,
                            uint64_t budget, double p, Rng& rng,
                            TurnEdgeCap* cap) {
    constexpr uint64_t kCost = 2;
    RuleOutcome out;
    // Nodes that predate this turn's entrants form the target pool.
    uint64_t pre_count =
        entrants.empty() ? g.node_count() : static_cast<uint64_t>(entrants.front());
    for (NodeId entrant : entrants) {
        if (out.actions_consumed >= budget) break;
        ++out.attempts;
        bool linked = false;
        if (rng.bernoulli(p) && pre_count > 0 &&
            out.actions_consumed + kCost <= budget && cap_allows(cap, entrant)) {
            NodeId target = static_cast<NodeId>(rng.uniform_index(pre_count));
            if (g.add_edge(entrant, target)) {
                cap_record(cap, entrant);
                note_success(out, kCost);
                linked = true;
            }
        }
        if (!linked) out.actions_consumed += kFailCost;
    }
    return out;
}

RuleOutcome rule_triadic(DirectedGraph& g, uint64_t budget, double p, Rng& rng,
                         TurnEdgeCap* cap) {
    constexpr uint64_t kCost = 3;
    RuleOutcome out;
    if (g.node_count() == 0) return out;
    while (out.actions_consumed < budget) {
        ++out.attempts;
        NodeId ego = g.random_node(rng);
        bool linked = false;
        if (rng.bernoulli(p)) {
            auto first = g.neighbors_out(ego);
            if (!first.empty()) {
                NodeId mid = first[rng.uniform_index(first.size())];
                auto second = g.neighbors_out(mid);
                if (!second.empty()) {
                    NodeId alter = second[rng.uniform_index(second.size())];
                    if (alter != ego && !g.has_edge(ego, alter) &&
                        out.actions_consumed + kCost <= budget &&
                        cap_allows(cap, ego) && g.add_edge(ego, alter)) {
                        cap_record(cap, ego);
                        note_success(out, kCost);
                        linked = true;
                    }
                }
            }
        }
        if (!linked) out.actions_consumed += kFailCost;
    }
    return out;
}

RuleOutcome rule_cumulative(DirectedGraph& g, uint64_t budget, double p,
                            Rng& rng, TurnEdgeCap* cap) {
    constexpr uint64_t kCost = 2;
    RuleOutcome out;
    uint64_t n = g.node_count();
    while (out.actions_consumed < budget) {
        ++out.attempts;
        bool linked = false;
        if (n >= 2) {
            NodeId a = g.random_node(rng);
            uint64_t shifted = rng.uniform_index(n - 1);
            NodeId b = static_cast<NodeId>(shifted >= a ? shifted + 1 : shifted);
            bool pass = rng.bernoulli(p);
            if (pass && g.in_degree(b) > g.in_degree(a) &&
                out.actions_consumed + kCost <= budget && cap_allows(cap, a) &&
                g.add_edge(a, b)) {
                cap_record(cap, a);
                note_success(out, kCost);
                linked = true;
            }
        }
        if (!linked) out.actions_consumed += kFailCost;
    }
    return out;
}

std::vector<NodeId> top_in_degree(const DirectedGraph& g, uint32_t k) {
    std::vector<NodeId> ids(g.node_count());
    std::iota(ids.begin(), ids.end(), NodeId{0});
    auto better = [&g](NodeId a, NodeId b) {
        uint64_t da = g.in_degree(a), db = g.in_degree(b);
        return da != db ? da > db : a < b;
    };
    if (ids.size() > k) {
        std::partial_sort(ids.begin(), ids.begin() + k, ids.end(), better);
        ids.resize(k);
    } else {
        std::sort(ids.begin(), ids.end(), better);
    }
    return ids;
}

bool within_distance_two(const DirectedGraph& g, NodeId src, NodeId dst) {
    if (src == dst) return true;
    auto adjacent = [&g](NodeId u, NodeId v) {
        return g.has_edge(u, v) || g.has_edge(v, u);
    };
    if (adjacent(src, dst)) return true;
    for (NodeId u : g.neighbors_out(src))
        if (adjacent(u, dst)) return true;
    for (NodeId u : g.neighbors_in(src))
        if (adjacent(u, dst)) return true;
    return false;
}

RuleOutcome rule_distance_closure(DirectedGraph& g, uint64_t budget, double p,
                                  uint32_t top_k, bool distance_check,
                                  Rng& rng, TurnEdgeCap* cap) {
    constexpr uint64_t kCost = 2;
    RuleOutcome out;
    if (g.node_count() == 0) return out;
    std::vector<NodeId> top = top_in_degree(g, top_k);
    while (out.actions_consumed < budget) {
        ++out.attempts;
        NodeId ego = g.random_node(rng);
        NodeId target = top[rng.uniform_index(top.size())];
        bool linked = false;
        if (rng.bernoulli(p) && ego != target && !g.has_edge(ego, target) &&
            (!distance_check || within_distance_two(g, ego, target)) &&
            out.actions_consumed + kCost <= budget && cap_allows(cap, ego) &&
            g.add_edge(ego, target)) {
            cap_record(cap, ego);
            note_success(out, kCost);
            linked = true;
        }
        if (!linked) out.actions_consumed += kFailCost;
    }
    return out;
}

} // namespace socnet
