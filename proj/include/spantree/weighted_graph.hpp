#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/numeric.hpp"

namespace spantree {

// Undirected graph with positive exact-rational edge weights. Weights of
// parallel edges (as produced by contraction) accumulate; an edge whose
// weight reaches zero is removed, so every stored weight is > 0.
class WeightedGraph {
public:
    using EdgeMap = std::map<std::pair<int, int>, BigRational>;

    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeMap& edges() const { return edges_; }

    BigRational weight(int u, int v) const;
    // Adds w to the (u, v) weight; w < 0 only allowed while cancelling an
    // existing weight, a negative total is rejected.
    void add_edge(int u, int v, const BigRational& w);

    bool connected() const;

    static WeightedGraph from_simple(const SimpleGraph& g);

    // Copy with one extra vertex joined by the given weighted edges.
    WeightedGraph with_vertex_added(const std::vector<std::pair<int, BigRational>>& attach) const;

private:
    int n_ = 0;
    EdgeMap edges_;
};

// Contracts edge (u, v) of a simple graph; parallel edges that arise are
// merged into summed weights. Vertex u absorbs v, vertices above v shift
// down by one.
WeightedGraph contract_edge(const SimpleGraph& g, int u, int v);

}  // namespace spantree
