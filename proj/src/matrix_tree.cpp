#include "spantree/matrix_tree.hpp"

#include <numeric>
#include <string>

namespace spantree {

BigInt determinant_bareiss(std::vector<BigInt> m, int n) {
    if (n == 0) return BigInt(1);
    auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row < 0) return BigInt(0);
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
            sign = -sign;
        }
        const BigInt pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev;
            at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

BigInt spanning_tree_count(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return BigInt(1);
    // Reduced Laplacian: drop vertex 0.
    const int k = n - 1;
    std::vector<BigInt> lap(static_cast<std::size_t>(k) * k, BigInt(0));
    for (int u = 1; u < n; ++u) lap[static_cast<std::size_t>(u - 1) * k + (u - 1)] = g.degree(u);
    for (const auto& [u, v] : g.edges()) {
        if (u == 0 || v == 0) continue;
        lap[static_cast<std::size_t>(u - 1) * k + (v - 1)] = -1;
        lap[static_cast<std::size_t>(v - 1) * k + (u - 1)] = -1;
    }
    return determinant_bareiss(std::move(lap), k);
}

BigRational weighted_tree_sum(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return BigRational(1);

    BigInt denom_lcm(1);
    for (const auto& [e, w] : g.edges()) denom_lcm = lcm(denom_lcm, denominator(w));

    const int k = n - 1;
    std::vector<BigInt> lap(static_cast<std::size_t>(k) * k, BigInt(0));
    auto add = [&](int i, int j, const BigInt& v) {
        if (i > 0 && j > 0) lap[static_cast<std::size_t>(i - 1) * k + (j - 1)] += v;
    };
    for (const auto& [e, w] : g.edges()) {
        const BigInt scaled = numerator(w) * (denom_lcm / denominator(w));
        add(e.first, e.first, scaled);
        add(e.second, e.second, scaled);
        add(e.first, e.second, -scaled);
        add(e.second, e.first, -scaled);
    }
    const BigInt det = determinant_bareiss(std::move(lap), k);
    return BigRational(det, int_pow(denom_lcm, static_cast<unsigned>(k)));
}

namespace {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
    std::vector<int> parent;
};

template <typename EdgeList, typename Visit>
void for_each_spanning_subset(int n, const EdgeList& edge_list, Visit&& visit) {
    const int m = static_cast<int>(edge_list.size());
    if (m > 24)
        throw SizeGuardError("spanning-tree oracle limited to m <= 24, got m = " +
                             std::to_string(m));
    const int need = n - 1;
    if (need < 0) return;
    if (need > m) return;
    std::vector<int> pick(static_cast<std::size_t>(need));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        UnionFind uf(n);
        int merges = 0;
        for (int idx : pick)
            if (uf.unite(edge_list[static_cast<std::size_t>(idx)].first,
                         edge_list[static_cast<std::size_t>(idx)].second))
                ++merges;
        if (merges == need) visit(pick);
        // next combination
        int i = need - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - need + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_spanning_trees(const SimpleGraph& g) {
    const auto edge_list = g.edges();
    std::vector<std::vector<std::pair<int, int>>> out;
    if (g.vertex_count() == 0) return out;
    for_each_spanning_subset(g.vertex_count(), edge_list, [&](const std::vector<int>& pick) {
        std::vector<std::pair<int, int>> tree;
        tree.reserve(pick.size());
        for (int idx : pick) tree.push_back(edge_list[static_cast<std::size_t>(idx)]);
        out.push_back(std::move(tree));
    });
    return out;
}

BigRational enumerate_weighted_tree_sum(const WeightedGraph& g) {
    std::vector<std::pair<int, int>> edge_list;
    std::vector<BigRational> weights;
    for (const auto& [e, w] : g.edges()) {
        edge_list.push_back(e);
        weights.push_back(w);
    }
    BigRational total(0);
    if (g.vertex_count() == 0) return total;
    if (g.vertex_count() == 1) return BigRational(1);
    for_each_spanning_subset(g.vertex_count(), edge_list, [&](const std::vector<int>& pick) {
        BigRational product(1);
        for (int idx : pick) product *= weights[static_cast<std::size_t>(idx)];
        total += product;
    });
    return total;
}

Real beta_of(const SimpleGraph& g) {
    const int mu = cyclomatic(g);  // throws if disconnected
    if (mu < 1) throw PreconditionError("beta undefined: cyclomatic number is zero");
    const BigInt count = spanning_tree_count(g);
    return exp(log(to_real(count)) / mu);
}

}  // namespace spantree
