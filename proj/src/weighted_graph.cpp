#include "spantree/weighted_graph.hpp"

#include <string>

namespace spantree {

WeightedGraph::WeightedGraph(int n) : n_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

BigRational WeightedGraph::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto it = edges_.find({u, v});
    return it == edges_.end() ? BigRational(0) : it->second;
}

void WeightedGraph::add_edge(int u, int v, const BigRational& w) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edges_.try_emplace({u, v}, w);
    if (!inserted) it->second += w;
    if (it->second < 0) throw PreconditionError("invalid weight: negative edge weight");
    if (it->second == 0) edges_.erase(it);
}

bool WeightedGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (const auto& [e, w] : edges_) {
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

WeightedGraph WeightedGraph::from_simple(const SimpleGraph& g) {
    WeightedGraph out(g.vertex_count());
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v, BigRational(1));
    return out;
}

WeightedGraph WeightedGraph::with_vertex_added(
    const std::vector<std::pair<int, BigRational>>& attach) const {
    WeightedGraph out(n_ + 1);
    out.edges_ = edges_;
    for (const auto& [v, w] : attach) out.add_edge(v, n_, w);
    return out;
}

WeightedGraph contract_edge(const SimpleGraph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw PreconditionError("contract_edge: edge not present");
    if (u > v) std::swap(u, v);
    const auto relabel = [&](int x) {
        if (x == v) return u;
        return x > v ? x - 1 : x;
    };
    WeightedGraph out(g.vertex_count() - 1);
    for (const auto& [a, b] : g.edges()) {
        const int ra = relabel(a);
        const int rb = relabel(b);
        if (ra == rb) continue;  // the contracted edge itself
        out.add_edge(ra, rb, BigRational(1));
    }
    return out;
}

}  // namespace spantree
