#pragma once

#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/numeric.hpp"
#include "spantree/weighted_graph.hpp"

namespace spantree {

// Exact spanning-tree count via a reduced-Laplacian determinant computed
// with fraction-free (Bareiss) elimination. Disconnected graphs count 0.
BigInt spanning_tree_count(const SimpleGraph& g);

// Weighted form: sum over spanning trees of the product of edge weights.
// Denominators are cleared up front so the elimination stays integral.
BigRational weighted_tree_sum(const WeightedGraph& g);

// Brute-force oracle: every (n-1)-edge subset tested for connectivity.
// Guarded to m <= 24. Independent of the determinant path.
std::vector<std::vector<std::pair<int, int>>> enumerate_spanning_trees(const SimpleGraph& g);

// Same oracle on a weighted graph, returning the weight-product sum.
BigRational enumerate_weighted_tree_sum(const WeightedGraph& g);

// beta(G) = SP(G)^(1/mu(G)); requires a connected graph with mu >= 1.
Real beta_of(const SimpleGraph& g);

// Exact determinant of a dense integer matrix (row-major, n x n).
BigInt determinant_bareiss(std::vector<BigInt> m, int n);

}  // namespace spantree
