#pragma once

#include <string>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

// Canonical representative of an isomorphism class. Two graphs are
// isomorphic iff their keys (graph6 of the representative) are equal.
struct CanonicalGraph {
    SimpleGraph graph;
    std::string key;
    std::vector<int> labeling;  // original vertex -> canonical position
};

// Canonical labeling by equitable refinement plus backtracking over the
// remaining cell orderings; guarded to n <= 16.
CanonicalGraph canonical_form(const SimpleGraph& g);

inline constexpr int kCanonicalMaxVertices = 16;

}  // namespace spantree
