#pragma once

#include <cstdint>
#include <random>

namespace socnet {

// Deterministic random stream. All simulation draws go through this wrapper
// instead of std distributions, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, n). Single draw (Lemire multiply-shift).
    uint64_t uniform_index(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<__uint128_t>(engine_()) * n) >> 64);
    }

    // Uniform real in [0, 1) with 53 bits of precision.
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

private:
    std::mt19937_64 engine_;
};

// Stable seed derivation (splitmix64 over the pair). Used for per-point
// sweep seeds and per-seed-index acceptance runs.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t x = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

} // namespace socnet
