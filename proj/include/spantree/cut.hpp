#pragma once

#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

// One side of an edge cut; removing the crossing edges disconnects the
// graph into `side` and its complement.
struct CutResult {
    int size = 0;
    std::vector<int> side;  // sorted
};

// Global minimum edge cut (Stoer-Wagner). Requires a connected graph with
// at least 2 vertices. The returned side is the smaller one (ties broken
// by the sorted vertex list).
CutResult min_cut(const SimpleGraph& g);

// Minimum cut with a pinned tie-break: among all minimum cuts, the one
// whose smaller side is lexicographically least after sorting. Found by
// scanning all bipartitions for n <= kBruteforceLimit; larger graphs fall
// back to the (still deterministic) Stoer-Wagner cut.
CutResult canonical_min_cut(const SimpleGraph& g);

inline constexpr int kCutBruteforceLimit = 18;

}  // namespace spantree
