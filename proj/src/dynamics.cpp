#include "dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "rules.hpp"

namespace socnet {

std::pair<uint64_t, double> entry_count(uint64_t n, double nu, double carry_in) {
    double total = static_cast<double>(n) * nu + carry_in;
    auto entrants = static_cast<uint64_t>(std::floor(total));
    return {entrants, total - static_cast<double>(entrants)};
}

uint64_t action_budget(uint64_t n, double psi) {
    return static_cast<uint64_t>(std::floor(static_cast<double>(n) * psi));
}

TurnStats step(DirectedGraph& g, const SimParams& params, SimState& state) {
    TurnStats stats;
    stats.turn = ++state.turn;

    auto [entrants, carry_out] = entry_count(g.node_count(), params.nu, state.carry);
    state.carry = carry_out;
    stats.entrants = entrants;
    stats.carry = carry_out;

    std::vector<NodeId> new_nodes;
    new_nodes.reserve(entrants);
    for (uint64_t i = 0; i < entrants; ++i)
        new_nodes.push_back(g.add_node(stats.turn));

    stats.tau = action_budget(g.node_count(), params.psi);

    std::array<uint64_t, 4> share{};
    uint64_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        share[i] = static_cast<uint64_t>(
            std::floor(static_cast<double>(stats.tau) * params.budget_split[i]));
        assigned += share[i];
    }
    share[3] = stats.tau - assigned;

    TurnEdgeCap cap(g.node_count(), params.kappa);

    uint64_t available = 0;
    auto settle = [&](int rule, const RuleOutcome& out) {
        stats.attempts_by_rule[rule] = out.attempts;
        stats.consumed_by_rule[rule] = out.actions_consumed;
        stats.edges_by_rule[rule] = out.successes;
        available -= out.actions_consumed; // rollover into the next share
    };

    available += share[0];
    settle(0, rule_randomness(g, new_nodes, available, params.p_random,
                              state.rng, &cap));
    available += share[1];
    settle(1, rule_triadic(g, available, params.p_triadic, state.rng, &cap));
    available += share[2];
    settle(2, rule_cumulative(g, available, params.p_cumulative, state.rng, &cap));
    available += share[3];
    settle(3, rule_distance_closure(g, available, params.p_distance,
                                    params.top_k, params.distance_check,
                                    state.rng, &cap));
    return stats;
}

RunResult run(const SimParams& params) {
    params.validate();
    if (params.nu == 0.0 && params.target_nodes > params.n0)
        throw std::invalid_argument("non-growing configuration: nu = 0 with target_nodes > n0");

    RunResult result;
    for (uint64_t i = 0; i < params.n0; ++i)
        result.graph.add_node(0);

    SimState state(params.seed);
    while (result.graph.node_count() < params.target_nodes)
        result.turns.push_back(step(result.graph, params, state));
    return result;
}

void write_turns_csv(std::span<const TurnStats> turns, std::ostream& out) {
    out << "turn,entrants,tau,consumed_r1,consumed_r2,consumed_r3,consumed_r4,"
           "edges_r1,edges_r2,edges_r3,edges_r4\n";
    for (const TurnStats& t : turns) {
        out << t.turn << ',' << t.entrants << ',' << t.tau;
        for (uint64_t c : t.consumed_by_rule) out << ',' << c;
        for (uint64_t e : t.edges_by_rule) out << ',' << e;
        out << '\n';
    }
}

} // namespace socnet
