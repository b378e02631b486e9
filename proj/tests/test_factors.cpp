#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "spantree/canonical.hpp"
#include "spantree/factors.hpp"
#include "spantree/matrix_tree.hpp"
#include "spantree/random_graphs.hpp"

using namespace spantree;

namespace {

BigRational direct_factor(const SimpleGraph& g, int attach_count) {
    // f(G) with a new vertex joined to vertices 0..attach_count-1
    std::uint64_t mask = 0;
    for (int v = 0; v < attach_count; ++v) mask |= std::uint64_t{1} << v;
    return BigRational(spanning_tree_count(g.with_vertex_added(mask)),
                       spanning_tree_count(g));
}

}  // namespace

TEST_CASE("apex limit graphs") {
    // two isolated vertices, d = 3: star with weights 2, 2
    const ApexLimitGraph star = apex_limit_graph(SimpleGraph(2), 3);
    CHECK(star.has_apex);
    CHECK(star.limit.vertex_count() == 3);
    CHECK(star.limit.weight(0, 2) == BigRational(2));
    CHECK(star.limit.weight(1, 2) == BigRational(2));
    CHECK(star.limit.weight(0, 1) == BigRational(0));

    // K2, d = 3: unit triangle
    const ApexLimitGraph tri = apex_limit_graph(SimpleGraph::complete(2), 3);
    CHECK(tri.has_apex);
    CHECK(tri.limit.vertex_count() == 3);
    CHECK(tri.limit.weight(0, 1) == BigRational(1));
    CHECK(tri.limit.weight(0, 2) == BigRational(1));
    CHECK(tri.limit.weight(1, 2) == BigRational(1));

    // H = K_d: all apex weights zero, apex dropped
    const ApexLimitGraph kd = apex_limit_graph(SimpleGraph::complete(4), 4);
    CHECK_FALSE(kd.has_apex);
    CHECK(kd.limit.vertex_count() == 4);
    CHECK(weighted_tree_sum(kd.limit) == BigRational(16));

    SimpleGraph too_dense = SimpleGraph::complete(3);
    CHECK_THROWS_AS(apex_limit_graph(too_dense, 2), PreconditionError);
    CHECK_THROWS_AS(apex_limit_graph(SimpleGraph::complete(5), 4), PreconditionError);
}

TEST_CASE("factors of small subgraphs") {
    CHECK(factor_of_subgraph(SimpleGraph::complete(2), 3) == BigRational(8, 3));
    CHECK(factor_of_subgraph(SimpleGraph(2), 3) == BigRational(3));
    // K_c hosts match the closed form as exact rationals
    for (int d = 2; d <= 9; ++d)
        for (int c = 1; c <= d; ++c)
            CHECK(factor_of_subgraph(SimpleGraph::complete(c), d) == closed_form_f(c, d));
}

TEST_CASE("closed form values") {
    CHECK(closed_form_f(2, 3) == BigRational(8, 3));
    CHECK(closed_form_f(4, 4) == BigRational(500, 64));
    for (int d = 1; d <= 11; ++d) CHECK(closed_form_f(1, d) == BigRational(1));
    CHECK(closed_form_f(5, 6) == BigRational(12005, 1296));
    CHECK(format_decimal(closed_form_f(10, 10), 6) == "23.579477");
    CHECK_THROWS_AS(closed_form_f(5, 4), PreconditionError);
}

TEST_CASE("clique extensions") {
    const SimpleGraph g3 = clique_extension(SimpleGraph::complete(2), 3, 3);
    CHECK(g3.vertex_count() == 5);
    CHECK(g3.degree(0) == 2);  // u_1: one subgraph edge plus one clique edge
    CHECK(g3.degree(1) == 2);
    CHECK(g3.has_edge(0, 2));
    CHECK(g3.has_edge(1, 2));

    // H = K_d needs no extension at all
    CHECK(clique_extension(SimpleGraph::complete(3), 3, 5) == SimpleGraph::complete(3));

    SimpleGraph hungry(3);  // three isolated vertices, d = 4 needs 3 slots each
    CHECK_THROWS_AS(clique_extension(hungry, 4, 2), PreconditionError);
}

TEST_CASE("extension factors decrease toward the limit value") {
    const SimpleGraph h = SimpleGraph::complete(2);
    const BigRational limit = factor_of_subgraph(h, 3);
    BigRational prev;
    for (int k = 3; k <= 8; ++k) {
        const BigRational f = clique_extension_factor(h, 3, k);
        CHECK(f >= limit);
        if (k > 3) CHECK(prev >= f);
        prev = f;
        // cross-route: the same value through the explicit small graph
        CHECK(f == direct_factor(clique_extension(h, 3, k), 2));
    }

    // identical attachment sets give the limit value immediately
    for (int k = 2; k <= 5; ++k)
        CHECK(clique_extension_factor(SimpleGraph(2), 3, k) == factor_of_subgraph(SimpleGraph(2), 3));

    // differing attachment prefixes approach the limit strictly from above
    const SimpleGraph p3 = SimpleGraph::path(3);
    const BigRational wlimit = factor_of_subgraph(p3, 4);
    BigRational last;
    for (int k = 2; k <= 7; ++k) {
        const BigRational f = clique_extension_factor(p3, 4, k);
        CHECK(f > wlimit);
        if (k > 2) CHECK(last > f);
        last = f;
    }
    CHECK(last - wlimit < BigRational(1, 50));
}

TEST_CASE("attachment pattern does not change the factor when slots are disjoint") {
    // H = path on 3 vertices, d = 4: needs are 2, 1, 2
    const SimpleGraph h = SimpleGraph::path(3);
    const int d = 4, k = 6, c = 3;
    const BigRational limit = factor_of_subgraph(h, d);

    const std::vector<std::vector<std::vector<int>>> assignments = {
        {{0, 1}, {2}, {3, 4}},
        {{5, 2}, {0}, {1, 3}},
        {{4, 0}, {5}, {2, 1}},
    };
    BigRational reference;
    for (std::size_t a = 0; a < assignments.size(); ++a) {
        SimpleGraph g(c + k);
        for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y) g.add_edge(c + x, c + y);
        for (int v = 0; v < c; ++v)
            for (int slot : assignments[a][static_cast<std::size_t>(v)]) g.add_edge(v, c + slot);
        const BigRational f = direct_factor(g, c);
        if (a == 0) reference = f;
        CHECK(f == reference);  // disjoint-slot assignments are all equivalent
        CHECK(f > limit);
    }
}

TEST_CASE("hosts attaching K_c to a common neighborhood realize the bound exactly") {
    for (int c = 2; c <= 4; ++c)
        for (int extra = 1; extra <= 2; ++extra) {
            const int d = c + extra;
            const int others = d - c;
            // every edge pattern among the shared neighbors
            const int bits = others * (others - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
                SimpleGraph g = SimpleGraph::complete(c);
                SimpleGraph host(c + others);
                for (const auto& [u, v] : g.edges()) host.add_edge(u, v);
                for (int v = 0; v < c; ++v)
                    for (int o = 0; o < others; ++o) host.add_edge(v, c + o);
                int bit = 0;
                for (int a = 0; a < others; ++a)
                    for (int b = a + 1; b < others; ++b, ++bit)
                        if ((mask >> bit) & 1) host.add_edge(c + a, c + b);
                CHECK(direct_factor(host, c) == closed_form_f(c, d));
            }
        }
}

TEST_CASE("adding an edge to the subgraph never raises the factor when c < d") {
    // The limit-graph form of edge monotonicity holds below the diagonal;
    // at c = d the apex reweighting can push the factor the other way.
    Rng rng(20240201);
    int cases = 0;
    while (cases < 60) {
        const int c = rng.uniform(2, 6);
        const int d = rng.uniform(c + 1, 9);
        SimpleGraph h = random_graph(rng, c, rng.uniform(0, c * (c - 1) / 2));
        if (h.max_degree() > d - 2) continue;
        int u = rng.uniform(0, c - 1), v = rng.uniform(0, c - 1);
        if (u == v || h.has_edge(u, v)) continue;
        SimpleGraph h_plus = h;
        h_plus.add_edge(u, v);
        CHECK(factor_of_subgraph(h_plus, d) <= factor_of_subgraph(h, d));
        ++cases;
    }
}

TEST_CASE("adding an edge anywhere in an explicit host lowers its factor") {
    Rng rng(20240202);
    int cases = 0;
    while (cases < 60) {
        const int n = rng.uniform(3, 8);
        const SimpleGraph g = random_graph(rng, n, rng.uniform(n - 1, n * (n - 1) / 2 - 1));
        if (!g.connected()) continue;
        const int c = rng.uniform(1, std::min(n, 4));
        int u = rng.uniform(0, n - 1), v = rng.uniform(0, n - 1);
        if (u == v || g.has_edge(u, v)) continue;
        SimpleGraph g_plus = g;
        g_plus.add_edge(u, v);
        CHECK(direct_factor(g_plus, c) <= direct_factor(g, c));
        ++cases;
    }
}

TEST_CASE("enumerated table equals the closed form with K_c as argmin") {
    const FactorTable table = FactorTable::enumerated(4, 7, 2);
    for (int c = 2; c <= 4; ++c)
        for (int d = c; d <= 7; ++d) {
            CHECK(table.value(c, d) == closed_form_f(c, d));
            CHECK(table.argmin_key(c, d) == canonical_form(SimpleGraph::complete(c)).key);
        }
    CHECK(table.value(1, 5) == BigRational(1));
    CHECK_THROWS_AS(table.value(5, 7), PreconditionError);
    CHECK(table.covers(3, 6));
    CHECK_FALSE(table.covers(3, 8));
}

TEST_CASE("ratio of complete-graph counts matches the diagonal cells") {
    for (int d = 2; d <= 8; ++d) {
        const BigRational ratio(spanning_tree_count(SimpleGraph::complete(d + 1)),
                                spanning_tree_count(SimpleGraph::complete(d)));
        CHECK(closed_form_f(d, d) == ratio);
    }
}

TEST_CASE("table rendering") {
    const FactorTable table = FactorTable::closed_form(5);
    const std::string csv = table.to_csv();
    CHECK(csv.find("2,3,8,3,2.666667,") != std::string::npos);
    CHECK(csv.find("4,4,125,16,7.812500,") != std::string::npos);
    const std::string text = table.to_text();
    CHECK(text.find("2.666667") != std::string::npos);
    CHECK(text.find("10.368000") != std::string::npos);
}
