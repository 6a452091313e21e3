#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace socnet {

// All model knobs for one simulation run.
struct SimParams {
    double nu = 0.05;          // entry-rate fraction, [0,1]
    double psi = 10.0;         // activity multiplier, [1,inf)
    uint32_t kappa = 15;       // per-turn per-node cap on created edges
    double p_random = 0.3;
    double p_triadic = 0.05;
    double p_cumulative = 0.05;
    double p_distance = 0.01;
    uint32_t top_k = 50;
    bool distance_check = true;
    uint64_t n0 = 10;
    uint64_t target_nodes = 10000;
    uint64_t seed = 1;
    // Fractions of each turn's budget offered to the four rules, in activation
    // order: randomness, triadic, cumulative, distance. Unspent actions roll
    // into the next rule's share.
    std::array<double, 4> budget_split{0.1, 0.3, 0.3, 0.3};

    void validate() const {
        auto prob = [](double p, const std::string& name) {
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument(name + " must be in [0,1]");
        };
        prob(nu, "nu");
        prob(p_random, "p_random");
        prob(p_triadic, "p_triadic");
        prob(p_cumulative, "p_cumulative");
        prob(p_distance, "p_distance");
        if (!(psi >= 1.0)) throw std::invalid_argument("psi must be >= 1");
        if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
        if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
        if (n0 < 1) throw std::invalid_argument("n0 must be >= 1");
        if (target_nodes < n0)
            throw std::invalid_argument("target_nodes must be >= n0");
        double sum = 0.0;
        for (double f : budget_split) {
            if (f < 0.0) throw std::invalid_argument("budget_split entries must be >= 0");
            sum += f;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("budget_split must sum to 1");
    }
};

// Per-turn ledger. Rule index order matches SimParams::budget_split.
struct TurnStats {
    uint32_t turn = 0;
    uint64_t entrants = 0;
    uint64_t tau = 0;
    std::array<uint64_t, 4> attempts_by_rule{};
    std::array<uint64_t, 4> consumed_by_rule{};
    std::array<uint64_t, 4> edges_by_rule{};
    double carry = 0.0;
};

} // namespace socnet
