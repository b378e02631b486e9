#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/numeric.hpp"
#include "spantree/weighted_graph.hpp"

namespace spantree {

// Weighted limit graph W for a host that contains an induced subgraph H on
// the attachment vertices u_i: the infinite clique extension collapses to a
// single apex w joined to each u_i with weight (d-1) - deg_H(u_i). When all
// apex weights vanish (H = K_d) the apex is dropped.
struct ApexLimitGraph {
    SimpleGraph base;                      // H on vertices 0..c-1
    int degree_bound = 0;                  // d
    std::vector<BigRational> apex_weights; // per u_i, zero entries carry no edge
    bool has_apex = false;
    WeightedGraph limit;                   // W; apex is the last vertex when present
};

ApexLimitGraph apex_limit_graph(const SimpleGraph& h, int d);

// f(W) = S(W + v) / S(W) where v is joined to every u_i by a unit edge.
// This lower-bounds the spanning-tree multiplier of any host containing H.
BigRational factor_of_subgraph(const SimpleGraph& h, int d);

// Conjectured closed form c * ((d+1)/d)^(c-1); proven for the hosts K_d.
BigRational closed_form_f(int c, int d);

// Finite stand-in for the limit: H plus a k-clique plus d-1-deg_H(u_i)
// edges from each u_i into the clique (each u_i takes clique vertices
// 0, 1, ... in order, at most one edge per pair).
SimpleGraph clique_extension(const SimpleGraph& h, int d, int k);

// SP(G_k + v) / SP(G_k) without materializing a SimpleGraph, so k may be
// large; used to watch the convergence toward factor_of_subgraph.
BigRational clique_extension_factor(const SimpleGraph& h, int d, int k);

struct FactorEntry {
    BigRational value;
    std::string argmin_key;  // canonical key of the minimizing subgraph
};

// Exact multipliers f_{c,d} for 1 <= c <= d <= d_max. f_{1,d} = 1 always;
// entries with c >= 2 satisfy f > c.
class FactorTable {
public:
    int c_max() const { return c_max_; }
    int d_max() const { return d_max_; }
    bool covers(int c, int d) const;

    const BigRational& value(int c, int d) const;
    const std::string& argmin_key(int c, int d) const;

    // Fills every cell from the closed form (no enumeration).
    static FactorTable closed_form(int d_max);

    // Minimizes factor_of_subgraph over the full isomorph-free stream of
    // subgraphs on c vertices, for every 2 <= c <= min(c_max, d) and
    // d <= d_max. Ties break toward the smaller canonical key.
    static FactorTable enumerated(int c_max, int d_max, int threads = 0);

    std::string to_csv() const;
    std::string to_text() const;  // rows d, columns c, 6-decimal entries

    // Copy with one cell replaced; meant for fault-injection tests.
    FactorTable with_value(int c, int d, const BigRational& value) const;

private:
    void insert(int c, int d, FactorEntry entry);

    int c_max_ = 0;
    int d_max_ = 0;
    std::map<std::pair<int, int>, FactorEntry> entries_;
};

}  // namespace spantree
