#include "spantree/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "spantree/graph_io.hpp"

namespace spantree {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Up to C(16,2) = 120 bits, packed MSB-first across two words.
struct BitString {
    std::array<std::uint64_t, 2> words{0, 0};
    int length = 0;

    void append(bool bit) {
        if (bit) words[static_cast<std::size_t>(length >> 6)] |= std::uint64_t{1} << (63 - (length & 63));
        ++length;
    }
    bool bit(int i) const {
        return (words[static_cast<std::size_t>(i >> 6)] >> (63 - (i & 63))) & 1;
    }
    // three-way compare of the first `len` bits
    int compare_prefix(const BitString& other, int len) const {
        for (int w = 0; w * 64 < len; ++w) {
            const int bits_here = std::min(64, len - w * 64);
            const std::uint64_t mask =
                bits_here == 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - bits_here);
            const std::uint64_t a = words[static_cast<std::size_t>(w)] & mask;
            const std::uint64_t b = other.words[static_cast<std::size_t>(w)] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }
};

struct Searcher {
    int n;
    std::array<std::uint32_t, 16> adj{};
    bool flip = false;  // dense graphs are canonized through the complement

    bool have_best = false;
    BitString best_bits;
    std::vector<int> best_perm;

    bool score(int u, int v) const {
        const bool edge = (adj[static_cast<std::size_t>(u)] >> v) & 1;
        return edge != flip;
    }

    std::uint32_t cell_mask(const Cell& c) const {
        std::uint32_t m = 0;
        for (int v : c) m |= std::uint32_t{1} << v;
        return m;
    }

    // Equitable refinement; subcells are ordered by neighbor count, descending.
    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
                const std::uint32_t wm = cell_mask(cells[w]);
                for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                    if (cells[ci].size() <= 1) continue;
                    auto count = [&](int v) {
                        return std::popcount(adj[static_cast<std::size_t>(v)] & wm);
                    };
                    const int first = count(cells[ci][0]);
                    bool uniform = true;
                    for (int v : cells[ci])
                        if (count(v) != first) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;

                    Cell sorted = cells[ci];
                    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
                        if (count(a) != count(b)) return count(a) > count(b);
                        return a < b;
                    });
                    Partition pieces;
                    Cell current{sorted[0]};
                    for (std::size_t i = 1; i < sorted.size(); ++i) {
                        if (count(sorted[i]) != count(current[0])) {
                            pieces.push_back(std::move(current));
                            current.clear();
                        }
                        current.push_back(sorted[i]);
                    }
                    pieces.push_back(std::move(current));
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci),
                                 pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    // True when every cell and cell pair is internally complete-or-empty;
    // then any cell-respecting completion yields identical bits.
    bool perfect(const Partition& cells) const {
        for (const auto& c : cells) {
            const std::uint32_t cm = cell_mask(c);
            const int within = std::popcount(adj[static_cast<std::size_t>(c[0])] & cm);
            if (within != 0 && within != static_cast<int>(c.size()) - 1) return false;
            for (const auto& d : cells) {
                if (&c == &d) continue;
                const std::uint32_t dm = cell_mask(d);
                const int crossing = std::popcount(adj[static_cast<std::size_t>(c[0])] & dm);
                if (crossing != 0 && crossing != static_cast<int>(d.size())) return false;
            }
        }
        return true;
    }

    // Appends the column bits of perm[from..to) and compares against the
    // current best. Returns false when the path is already worse.
    bool extend_bits(const std::vector<int>& perm, int from, int to, BitString& bits) const {
        for (int p = from; p < to; ++p)
            for (int i = 0; i < p; ++i) bits.append(score(perm[i], perm[p]));
        if (!have_best) return true;
        return bits.compare_prefix(best_bits, bits.length) >= 0;
    }

    void take_leaf(const std::vector<int>& perm, const BitString& bits) {
        if (have_best && bits.compare_prefix(best_bits, bits.length) <= 0) return;
        have_best = true;
        best_bits = bits;
        best_perm = perm;
    }

    void dfs(Partition cells, std::vector<int> perm, BitString bits) {
        refine(cells);

        std::size_t target = 0;
        while (target < cells.size() && cells[target].size() == 1) ++target;

        // place new leading singletons
        const int placed_before = static_cast<int>(perm.size());
        for (std::size_t i = static_cast<std::size_t>(placed_before); i < target; ++i)
            perm.push_back(cells[i][0]);
        if (!extend_bits(perm, placed_before, static_cast<int>(perm.size()), bits)) return;

        if (target == cells.size()) {
            take_leaf(perm, bits);
            return;
        }

        if (perfect(cells)) {
            const int from = static_cast<int>(perm.size());
            for (std::size_t i = target; i < cells.size(); ++i)
                for (int v : cells[i]) perm.push_back(v);
            if (!extend_bits(perm, from, static_cast<int>(perm.size()), bits)) return;
            take_leaf(perm, bits);
            return;
        }

        for (std::size_t k = 0; k < cells[target].size(); ++k) {
            Partition child = cells;
            Cell rest = cells[target];
            const int v = rest[k];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            child[target] = Cell{v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
            dfs(std::move(child), perm, bits);
        }
    }
};

}  // namespace

CanonicalGraph canonical_form(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > kCanonicalMaxVertices)
        throw SizeGuardError("canonical_form limited to 16 vertices, got " + std::to_string(n));

    CanonicalGraph out;
    if (n == 0) {
        out.graph = g;
        out.key = to_graph6(g);
        return out;
    }

    Searcher s;
    s.n = n;
    for (int v = 0; v < n; ++v)
        s.adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbor_mask(v));
    s.flip = 2 * g.edge_count() > n * (n - 1) / 2;

    Cell all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    s.dfs(Partition{all}, {}, {});

    SimpleGraph canon(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(s.best_perm[static_cast<std::size_t>(i)],
                           s.best_perm[static_cast<std::size_t>(j)]))
                canon.add_edge(i, j);

    out.graph = std::move(canon);
    out.key = to_graph6(out.graph);
    out.labeling.assign(static_cast<std::size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos)
        out.labeling[static_cast<std::size_t>(s.best_perm[static_cast<std::size_t>(pos)])] = pos;
    return out;
}

}  // namespace spantree
