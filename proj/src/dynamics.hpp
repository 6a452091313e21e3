#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "params.hpp"
#include "rng.hpp"

namespace socnet {

// Entrants this turn given current size: floor(n*nu + carry). The fractional
// remainder carries forward so long-run growth has no rounding bias.
std::pair<uint64_t, double> entry_count(uint64_t n, double nu, double carry_in);

// Action budget for a turn: floor(n * psi), computed on post-entry size.
uint64_t action_budget(uint64_t n, double psi);

struct SimState {
    Rng rng;
    double carry = 0.0;
    uint32_t turn = 0;

    explicit SimState(uint64_t seed) : rng(seed) {}
};

// One turn: add entrants, compute the budget, run the four rules in
// activation order against their budget shares (unspent actions roll into
// the next rule's share).
TurnStats step(DirectedGraph& g, const SimParams& params, SimState& state);

struct RunResult {
    DirectedGraph graph;
    std::vector<TurnStats> turns;
};

// Seeds n0 isolated nodes and steps until node count reaches target_nodes.
RunResult run(const SimParams& params);

void write_turns_csv(std::span<const TurnStats> turns, std::ostream& out);

} // namespace socnet
