#include "spantree/random_graphs.hpp"

#include <utility>
#include <vector>

namespace spantree {

SimpleGraph random_graph(Rng& rng, int n, int m) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (m > static_cast<int>(pairs.size()))
        throw PreconditionError("random_graph: too many edges requested");
    // Partial Fisher-Yates: the first m entries become the edge set.
    for (int i = 0; i < m; ++i) {
        const int j = rng.uniform(i, static_cast<int>(pairs.size()) - 1);
        std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(j)]);
    }
    SimpleGraph g(n);
    for (int i = 0; i < m; ++i) g.add_edge(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second);
    return g;
}

SimpleGraph random_connected_graph(Rng& rng, int n, int m) {
    if (m < n - 1) throw PreconditionError("random_connected_graph: m < n - 1");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        SimpleGraph g = random_graph(rng, n, m);
        if (g.connected()) return g;
    }
    throw Error("random_connected_graph: did not produce a connected graph");
}

SimpleGraph random_connected_bounded_degree(Rng& rng, int n, int d, int extra_edges) {
    if (d < 1 && n > 1) throw PreconditionError("degree bound too small");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        SimpleGraph g(n);
        bool ok = true;
        for (int v = 1; v < n && ok; ++v) {
            int u = -1;
            for (int tries = 0; tries < 64; ++tries) {
                const int cand = rng.uniform(0, v - 1);
                if (g.degree(cand) < d) {
                    u = cand;
                    break;
                }
            }
            if (u < 0) ok = false;
            else g.add_edge(u, v);
        }
        if (!ok) continue;
        for (int e = 0; e < extra_edges; ++e) {
            const int u = rng.uniform(0, n - 1);
            const int v = rng.uniform(0, n - 1);
            if (u == v || g.has_edge(u, v)) continue;
            if (g.degree(u) >= d || g.degree(v) >= d) continue;
            g.add_edge(u, v);
        }
        return g;
    }
    throw Error("random_connected_bounded_degree: generation failed");
}

}  // namespace spantree
