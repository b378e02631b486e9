#pragma once

#include <cstdint>
#include <random>

#include "spantree/graph.hpp"

namespace spantree {

// Deterministic RNG for the randomized suites. mt19937_64 has a fully
// specified output sequence, so seeded runs are reproducible everywhere;
// bounded draws avoid std::uniform_int_distribution on purpose (its
// mapping is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    bool chance(int num, int den) { return uniform(0, den - 1) < num; }

private:
    std::mt19937_64 engine_;
};

// Uniform-ish simple graph with exactly m edges.
SimpleGraph random_graph(Rng& rng, int n, int m);

// Retries random_graph until connected.
SimpleGraph random_connected_graph(Rng& rng, int n, int m);

// Connected graph with max degree <= d: random tree grown under the degree
// cap plus extra_edges additional random edges that respect the cap.
SimpleGraph random_connected_bounded_degree(Rng& rng, int n, int d, int extra_edges);

}  // namespace spantree
