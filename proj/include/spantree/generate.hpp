#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spantree/canonical.hpp"
#include "spantree/graph.hpp"

namespace spantree {

// Isomorph-free exhaustive generation by canonical augmentation: a child
// produced by appending one vertex survives only if its parent equals the
// child's canonical deletion, so every class appears exactly once.
struct GenerateOptions {
    int max_deg = -1;    // -1: unbounded (effectively c - 1)
    int threads = 0;     // 0: SPANTREE_THREADS env var, then hardware count

    // Optional shard: after the level with `shard_depth` vertices is built
    // (sorted), only parents with index in [shard_begin, shard_end) are
    // expanded further. Shards of one depth partition the final stream.
    int shard_depth = -1;
    std::uint64_t shard_begin = 0;
    std::uint64_t shard_end = UINT64_MAX;
};

// Sorted canonical keys (graph6) of all isomorphism classes on c vertices
// with max degree <= max_deg.
std::vector<std::string> generate_graph_keys(int c, const GenerateOptions& options = {});

// Streams the classes in sorted key order.
void generate_graphs(int c, const GenerateOptions& options,
                     const std::function<void(const CanonicalGraph&)>& sink);

// Class count only; the final level is never stored.
std::uint64_t count_graphs(int c, const GenerateOptions& options = {});

// Parses "depth begin end" (whitespace separated) into a shard restriction.
GenerateOptions parse_shard_descriptor(const std::string& text);

}  // namespace spantree
