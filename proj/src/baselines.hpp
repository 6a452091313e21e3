#pragma once

#include <cstdint>

#include "graph.hpp"

namespace socnet {

// Each ordered pair (i, j), i != j, holds an edge independently with
// probability p.
DirectedGraph generate_erdos_renyi(uint64_t n, double p, uint64_t seed);

// Classical cumulative advantage: seed clique of m+1 nodes, then each
// entrant links to m distinct targets drawn proportionally to total degree.
DirectedGraph generate_pref_attach(uint64_t n, uint64_t m, uint64_t seed);

} // namespace socnet
