#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>

#include "spantree/cut.hpp"
#include "spantree/graph.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/matrix_tree.hpp"
#include "spantree/numeric.hpp"
#include "spantree/random_graphs.hpp"
#include "spantree/weighted_graph.hpp"

using namespace spantree;

namespace {

SimpleGraph from_mask(int n, std::uint64_t edge_mask) {
    SimpleGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((edge_mask >> bit) & 1) g.add_edge(u, v);
    return g;
}

SimpleGraph square_with_diagonal() {
    SimpleGraph g = SimpleGraph::cycle(4);
    g.add_edge(0, 2);
    return g;
}

// Independent of Stoer-Wagner: minimum over all proper bipartitions.
int bipartition_min_cut(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = g.edge_count() + 1;
    for (std::uint64_t side = 1; side < (std::uint64_t{1} << (n - 1)); ++side) {
        const std::uint64_t mask = side << 1;  // vertex 0 stays outside
        int crossing = 0;
        auto bits = mask;
        while (bits) {
            const int v = std::countr_zero(bits);
            bits &= bits - 1;
            crossing += std::popcount(g.neighbor_mask(v) & ~mask);
        }
        best = std::min(best, crossing);
    }
    return best;
}

}  // namespace

TEST_CASE("spanning tree counts match the closed forms for complete graphs") {
    CHECK(spanning_tree_count(SimpleGraph::complete(4)) == 16);
    CHECK(spanning_tree_count(SimpleGraph::complete(6)) == 1296);
    for (int n = 2; n <= 11; ++n)
        CHECK(spanning_tree_count(SimpleGraph::complete(n)) ==
              int_pow(BigInt(n), static_cast<unsigned>(n - 2)));
}

TEST_CASE("trees, cycles and small fixtures") {
    CHECK(spanning_tree_count(SimpleGraph::path(1)) == 1);
    CHECK(spanning_tree_count(SimpleGraph::path(7)) == 1);
    CHECK(spanning_tree_count(SimpleGraph::cycle(5)) == 5);
    CHECK(spanning_tree_count(square_with_diagonal()) == 8);
    SimpleGraph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK(spanning_tree_count(disconnected) == 0);
}

TEST_CASE("weighted tree sums") {
    WeightedGraph triangle(3);
    triangle.add_edge(0, 1, BigRational(1));
    triangle.add_edge(1, 2, BigRational(1));
    triangle.add_edge(0, 2, BigRational(1));
    CHECK(weighted_tree_sum(triangle) == BigRational(3));

    WeightedGraph weighted(3);
    weighted.add_edge(0, 1, BigRational(1));
    weighted.add_edge(1, 2, BigRational(1));
    weighted.add_edge(0, 2, BigRational(2));
    CHECK(weighted_tree_sum(weighted) == BigRational(5));

    WeightedGraph path(3);
    path.add_edge(0, 1, BigRational(2));
    path.add_edge(1, 2, BigRational(3));
    CHECK(weighted_tree_sum(path) == BigRational(6));

    WeightedGraph rational(3);
    rational.add_edge(0, 1, BigRational(1, 2));
    rational.add_edge(1, 2, BigRational(1, 3));
    rational.add_edge(0, 2, BigRational(1));
    CHECK(weighted_tree_sum(rational) == enumerate_weighted_tree_sum(rational));

    CHECK_THROWS_AS(triangle.add_edge(0, 1, BigRational(-7)), PreconditionError);
}

TEST_CASE("brute-force oracle agrees on fixtures and respects its guard") {
    CHECK(enumerate_spanning_trees(SimpleGraph::cycle(3)).size() == 3);
    CHECK(enumerate_spanning_trees(SimpleGraph::complete(4)).size() == 16);
    CHECK(enumerate_spanning_trees(SimpleGraph(2)).empty());
    CHECK_THROWS_AS(enumerate_spanning_trees(SimpleGraph::complete(8)), SizeGuardError);
}

TEST_CASE("determinant equals enumeration for every labeled graph up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            const SimpleGraph g = from_mask(n, mask);
            CHECK(spanning_tree_count(g) == BigInt(enumerate_spanning_trees(g).size()));
        }
    }
}

TEST_CASE("determinant equals enumeration on random graphs with m <= 20") {
    Rng rng(20240001);
    for (int i = 0; i < 120; ++i) {
        const int n = rng.uniform(2, 9);
        const int max_m = std::min(20, n * (n - 1) / 2);
        const SimpleGraph g = random_graph(rng, n, rng.uniform(0, max_m));
        CHECK(spanning_tree_count(g) == BigInt(enumerate_spanning_trees(g).size()));
    }
}

TEST_CASE("all-unit weighted sum equals the unweighted count") {
    Rng rng(20240002);
    for (int i = 0; i < 120; ++i) {
        const int n = rng.uniform(2, 8);
        const SimpleGraph g = random_graph(rng, n, rng.uniform(0, n * (n - 1) / 2));
        CHECK(weighted_tree_sum(WeightedGraph::from_simple(g)) ==
              BigRational(spanning_tree_count(g)));
    }
}

TEST_CASE("deletion-contraction identity, exhaustive to 5 vertices") {
    for (int n = 2; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            const SimpleGraph g = from_mask(n, mask);
            for (const auto& [u, v] : g.edges()) {
                SimpleGraph minus = g;
                minus.remove_edge(u, v);
                const BigRational contracted = weighted_tree_sum(contract_edge(g, u, v));
                CHECK(BigRational(spanning_tree_count(g)) ==
                      BigRational(spanning_tree_count(minus)) + contracted);
            }
        }
    }
}

TEST_CASE("electrical property: edge inclusion probability from the tree counts") {
    Rng rng(20240003);
    int graphs = 0;
    while (graphs < 100) {
        const int n = rng.uniform(3, 8);
        const int max_m = n * (n - 1) / 2;
        const SimpleGraph g = random_graph(rng, n, rng.uniform(n - 1, max_m));
        if (!g.connected()) continue;
        ++graphs;
        const BigRational total(spanning_tree_count(g));
        for (const auto& [u, v] : g.edges()) {
            SimpleGraph minus = g;
            minus.remove_edge(u, v);
            const BigRational deleted(spanning_tree_count(minus));
            const BigRational contracted = weighted_tree_sum(contract_edge(g, u, v));
            REQUIRE(contracted > 0);
            // resistance with (u,v) removed and unit resistors elsewhere
            const BigRational res = deleted / contracted;
            CHECK(contracted / total == BigRational(1) / (BigRational(1) + res));
            CHECK(total == deleted + contracted);
        }
    }
}

TEST_CASE("cyclomatic numbers") {
    CHECK(cyclomatic(SimpleGraph::path(6)) == 0);
    CHECK(cyclomatic(SimpleGraph::complete(4)) == 3);
    CHECK(cyclomatic(SimpleGraph::complete(11)) == 45);
    SimpleGraph disconnected(3);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(cyclomatic(disconnected), PreconditionError);
}

TEST_CASE("beta values carry enough precision") {
    const Real beta_k4 = beta_of(SimpleGraph::complete(4));
    CHECK(abs(beta_k4 - exp(log(Real(16)) / 3)) < Real("1e-45"));
    CHECK(format_decimal(beta_k4, 6) == "2.519842");
    CHECK(format_decimal(beta_of(SimpleGraph::complete(11)), 6) == "1.615394");
    CHECK(format_decimal(beta_of(square_with_diagonal()), 6) == "2.828427");
    CHECK_THROWS_AS(beta_of(SimpleGraph::path(4)), PreconditionError);
}

TEST_CASE("minimum cuts on fixtures") {
    CHECK(min_cut(SimpleGraph::cycle(7)).size == 2);
    for (int d = 2; d <= 6; ++d) CHECK(min_cut(SimpleGraph::complete(d + 1)).size == d);

    SimpleGraph bridged(6);  // two triangles joined by one bridge
    bridged.add_edge(0, 1);
    bridged.add_edge(1, 2);
    bridged.add_edge(0, 2);
    bridged.add_edge(3, 4);
    bridged.add_edge(4, 5);
    bridged.add_edge(3, 5);
    bridged.add_edge(2, 3);
    const CutResult cut = min_cut(bridged);
    CHECK(cut.size == 1);
    CHECK(cut.side.size() == 3);

    CHECK_THROWS_AS(min_cut(SimpleGraph(1)), PreconditionError);
}

TEST_CASE("min cut equals the bipartition brute force") {
    Rng rng(20240004);
    for (int i = 0; i < 80; ++i) {
        const int n = rng.uniform(2, 10);
        const int max_m = n * (n - 1) / 2;
        const SimpleGraph g = random_graph(rng, n, rng.uniform(n - 1, max_m));
        if (!g.connected()) continue;
        const int expected = bipartition_min_cut(g);
        CHECK(min_cut(g).size == expected);
        const CutResult canonical = canonical_min_cut(g);
        CHECK(canonical.size == expected);
        // the canonical side is a genuine cut side of that size
        std::uint64_t mask = 0;
        for (int v : canonical.side) mask |= std::uint64_t{1} << v;
        int crossing = 0;
        for (int v : canonical.side) crossing += std::popcount(g.neighbor_mask(v) & ~mask);
        CHECK(crossing == expected);
    }
}

TEST_CASE("edge list parsing") {
    const SimpleGraph g = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    CHECK(g == SimpleGraph::cycle(3));
    CHECK(parse_edge_list(to_edge_list(g)) == g);

    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("abc"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1"), ParseError);
    try {
        parse_edge_list("2 1\n0 5");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("graph6 encoding is bit-exact") {
    CHECK(to_graph6(SimpleGraph::complete(4)) == "C~");
    CHECK(parse_graph6("C~") == SimpleGraph::complete(4));

    Rng rng(20240005);
    for (int i = 0; i < 200; ++i) {
        const int n = rng.uniform(1, 12);
        const SimpleGraph g = random_graph(rng, n, rng.uniform(0, n * (n - 1) / 2));
        CHECK(parse_graph6(to_graph6(g)) == g);
    }

    CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B~"), ParseError);  // nonzero padding for n = 3
    CHECK(parse_graph_auto("3 2\n0 1\n1 2") == SimpleGraph::path(3));
    CHECK(parse_graph_auto("C~") == SimpleGraph::complete(4));
}

TEST_CASE("decimal formatting rounds half away from zero") {
    CHECK(format_decimal(BigRational(2916, 512), 6) == "5.695313");
    CHECK(format_decimal(BigRational(1, 3), 6) == "0.333333");
    CHECK(format_decimal(BigRational(2, 3), 6) == "0.666667");
    CHECK(format_decimal(BigRational(-1, 8), 2) == "-0.13");
    CHECK(format_decimal(BigRational(5), 3) == "5.000");
    CHECK(format_decimal(Real("2.5198421"), 6) == "2.519842");
}

TEST_CASE("certified log rounding stays below the true logarithm") {
    const BigRational grid(BigInt(1), int_pow(BigInt(10), 12));
    for (const BigRational f : {BigRational(11, 5), BigRational(8, 3), BigRational(3),
                                BigRational(2357947691LL, 100000000LL)}) {
        const BigRational a = log_lower_grid(f);
        CHECK(exp_upper_bound(a) <= f);            // certified lower bound
        CHECK(exp_upper_bound(a + grid) > f);      // and tight to one grid step
    }
    CHECK(log_lower_grid(BigRational(1)) == 0);
}
