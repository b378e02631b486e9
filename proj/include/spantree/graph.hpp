#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spantree/errors.hpp"

namespace spantree {

// Undirected simple graph on at most 64 vertices. Adjacency is kept as one
// bitmask per vertex; all operations are value-semantic and side-effect free.
class SimpleGraph {
public:
    static constexpr int kMaxVertices = 64;

    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbor_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    int max_degree() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool connected() const;
    // Connectivity of the subgraph induced on the masked vertices.
    bool connected_within(std::uint64_t mask) const;
    // Vertex sets of the connected components, each sorted.
    std::vector<std::vector<int>> components() const;

    // Induced subgraph; vertices are relabeled by their position in `verts`.
    SimpleGraph induced(const std::vector<int>& verts) const;
    // Copy with one extra vertex adjacent to the masked vertices.
    SimpleGraph with_vertex_added(std::uint64_t attach_mask) const;
    SimpleGraph complement() const;

    bool operator==(const SimpleGraph&) const = default;

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);
    // Vertex i is joined to i +- s (mod n) for each offset s.
    static SimpleGraph circulant(int n, const std::vector<int>& offsets);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Cyclomatic number m - n + 1; requires a connected graph.
int cyclomatic(const SimpleGraph& g);

}  // namespace spantree
