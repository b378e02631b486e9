#include "spantree/cut.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/one_bit_color_map.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>

#include <algorithm>
#include <bit>

namespace spantree {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Smaller of the two sides; size tie broken by the sorted vertex list.
std::vector<int> smaller_side(const SimpleGraph& g, std::uint64_t side_mask) {
    const int n = g.vertex_count();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto a = mask_to_vertices(side_mask);
    auto b = mask_to_vertices(all & ~side_mask);
    if (a.size() != b.size()) return a.size() < b.size() ? a : b;
    return a < b ? a : b;
}

int crossing_edges(const SimpleGraph& g, std::uint64_t side_mask) {
    int count = 0;
    auto bits = side_mask;
    while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        count += std::popcount(g.neighbor_mask(v) & ~side_mask);
    }
    return count;
}

}  // namespace

CutResult min_cut(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("min_cut needs at least 2 vertices");
    if (!g.connected()) throw PreconditionError("min_cut requires a connected graph");

    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                              boost::property<boost::edge_weight_t, int>>;
    BoostGraph bg(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1, bg);

    auto parities = boost::make_one_bit_color_map(num_vertices(bg), get(boost::vertex_index, bg));
    const int w =
        boost::stoer_wagner_min_cut(bg, get(boost::edge_weight, bg), boost::parity_map(parities));

    std::uint64_t side_mask = 0;
    for (int v = 0; v < n; ++v)
        if (get(parities, static_cast<std::size_t>(v))) side_mask |= std::uint64_t{1} << v;
    return CutResult{w, smaller_side(g, side_mask)};
}

CutResult canonical_min_cut(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("min_cut needs at least 2 vertices");
    if (n > kCutBruteforceLimit) return min_cut(g);
    if (!g.connected()) throw PreconditionError("min_cut requires a connected graph");

    int best_size = -1;
    std::vector<int> best_side;
    // Every bipartition exactly once: vertex 0 stays on the complement side.
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t code = 1; code < limit; ++code) {
        const std::uint64_t side_mask = code << 1;
        const int size = crossing_edges(g, side_mask);
        if (best_size >= 0 && size > best_size) continue;
        auto side = smaller_side(g, side_mask);
        if (best_size < 0 || size < best_size || side < best_side) {
            best_size = size;
            best_side = std::move(side);
        }
    }
    return CutResult{best_size, std::move(best_side)};
}

}  // namespace spantree
