#include "spantree/graph.hpp"

#include <bit>
#include <string>

namespace spantree {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw PreconditionError("vertex count must be in [0, 64], got " + std::to_string(n));
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++m_;
}

void SimpleGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    --m_;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(adj_[static_cast<std::size_t>(v)]));
    return best;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    return connected_within(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
}

bool SimpleGraph::connected_within(std::uint64_t mask) const {
    if (mask == 0) return true;
    const std::uint64_t start = mask & (~mask + 1);
    std::uint64_t seen = start;
    std::uint64_t frontier = start;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[static_cast<std::size_t>(v)] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
    std::vector<std::vector<int>> out;
    std::uint64_t left = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    if (n_ == 0) return out;
    while (left) {
        const std::uint64_t start = left & (~left + 1);
        std::uint64_t seen = start;
        std::uint64_t frontier = start;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj_[static_cast<std::size_t>(v)] & left & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        std::vector<int> comp;
        std::uint64_t bits = seen;
        while (bits) {
            comp.push_back(std::countr_zero(bits));
            bits &= bits - 1;
        }
        out.push_back(std::move(comp));
        left &= ~seen;
    }
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& verts) const {
    SimpleGraph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

SimpleGraph SimpleGraph::with_vertex_added(std::uint64_t attach_mask) const {
    SimpleGraph out(n_ + 1);
    for (const auto& [u, v] : edges()) out.add_edge(u, v);
    std::uint64_t bits = attach_mask;
    while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        out.add_edge(v, n_);
    }
    return out;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.add_edge(u, v);
    return out;
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
    SimpleGraph g(n);
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::circulant(int n, const std::vector<int>& offsets) {
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v)
        for (int s : offsets) {
            if (s <= 0 || s > n / 2) throw PreconditionError("circulant offset out of range");
            g.add_edge(v, (v + s) % n);
        }
    return g;
}

int cyclomatic(const SimpleGraph& g) {
    if (!g.connected()) throw PreconditionError("cyclomatic number requires a connected graph");
    return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace spantree
