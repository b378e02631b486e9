#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "spantree/canonical.hpp"
#include "spantree/generate.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/random_graphs.hpp"

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

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph out(g.vertex_count());
    for (const auto& [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

// Labeled-graph oracle: canonical keys of all 2^C(n,2) labeled graphs,
// optionally degree-capped, bucketed into classes.
std::map<std::string, std::uint64_t> labeled_class_counts(int n, int max_deg) {
    std::map<std::string, std::uint64_t> buckets;
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        const SimpleGraph g = from_mask(n, mask);
        if (max_deg >= 0 && g.max_degree() > max_deg) continue;
        ++buckets[canonical_form(g).key];
    }
    return buckets;
}

}  // namespace

TEST_CASE("canonical keys identify isomorphism classes") {
    SimpleGraph p1(3);
    p1.add_edge(0, 1);
    p1.add_edge(1, 2);
    SimpleGraph p2(3);
    p2.add_edge(1, 0);
    p2.add_edge(0, 2);
    CHECK(canonical_form(p1).key == canonical_form(p2).key);
    CHECK(canonical_form(p1).key != canonical_form(SimpleGraph::cycle(3)).key);
    CHECK(canonical_form(SimpleGraph::cycle(3)).key != canonical_form(SimpleGraph(3)).key);
}

TEST_CASE("canonical key is stable under random relabelings") {
    Rng rng(20240101);
    const std::vector<SimpleGraph> fixtures = {
        SimpleGraph::complete(4),  SimpleGraph::cycle(6),  SimpleGraph::path(7),
        SimpleGraph::circulant(10, {1, 2}), SimpleGraph::complete(7),
        random_connected_graph(rng, 9, 14)};
    for (const auto& g : fixtures) {
        const std::string key = canonical_form(g).key;
        const int n = g.vertex_count();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int trial = 0; trial < 200; ++trial) {
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[static_cast<std::size_t>(rng.uniform(0, i))]);
            CHECK(canonical_form(relabel(g, perm)).key == key);
        }
    }
    // 1000 relabelings of K4 in particular
    const std::string k4 = canonical_form(SimpleGraph::complete(4)).key;
    std::vector<int> perm{0, 1, 2, 3};
    for (int trial = 0; trial < 1000; ++trial) {
        for (int i = 3; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.uniform(0, i))]);
        CHECK(canonical_form(relabel(SimpleGraph::complete(4), perm)).key == k4);
    }
}

TEST_CASE("canonical labeling matches a brute-force canonical form on small graphs") {
    // brute force: max graph6 string over all permutations
    Rng rng(20240102);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform(1, 6);
        const SimpleGraph g = random_graph(rng, n, rng.uniform(0, n * (n - 1) / 2));
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::set<std::string> keys;
        do {
            keys.insert(to_graph6(relabel(g, perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        // our canonical key must be one fixed, relabeling-invariant member
        CHECK(keys.count(canonical_form(g).key) == 1);
    }
    CHECK_THROWS_AS(canonical_form(SimpleGraph(17)), SizeGuardError);
}

TEST_CASE("generated class counts match the labeled-graph oracle") {
    const std::uint64_t expected_all[] = {1, 2, 4, 11, 34, 156};
    for (int c = 1; c <= 6; ++c) {
        const auto oracle = labeled_class_counts(c, -1);
        const auto keys = generate_graph_keys(c);
        CHECK(keys.size() == oracle.size());
        CHECK(keys.size() == expected_all[c - 1]);
        for (const auto& key : keys) CHECK(oracle.count(key) == 1);
        CHECK(std::is_sorted(keys.begin(), keys.end()));
    }
}

TEST_CASE("generated counts for seven and eight vertices match the known class numbers") {
    CHECK(generate_graph_keys(7).size() == 1044);
    GenerateOptions options;
    options.threads = 2;
    CHECK(count_graphs(8, options) == 12346);
}

TEST_CASE("degree caps are honored and complete against the oracle") {
    for (int c = 3; c <= 6; ++c)
        for (int cap = 1; cap < c; ++cap) {
            GenerateOptions options;
            options.max_deg = cap;
            const auto keys = generate_graph_keys(c, options);
            const auto oracle = labeled_class_counts(c, cap);
            CHECK(keys.size() == oracle.size());
            for (const auto& key : keys) {
                CHECK(oracle.count(key) == 1);
                CHECK(parse_graph6(key).max_degree() <= cap);
            }
        }
}

TEST_CASE("no duplicate canonical keys appear in the stream") {
    for (int c = 4; c <= 7; ++c) {
        const auto keys = generate_graph_keys(c);
        std::set<std::string> unique(keys.begin(), keys.end());
        CHECK(unique.size() == keys.size());
    }
}

TEST_CASE("shards partition the stream") {
    const auto full = generate_graph_keys(7);
    const auto level6 = generate_graph_keys(6);
    std::vector<std::string> merged;
    const std::uint64_t step = 37;
    for (std::uint64_t lo = 0; lo < level6.size(); lo += step) {
        GenerateOptions options;
        options.shard_depth = 6;
        options.shard_begin = lo;
        options.shard_end = lo + step;
        const auto part = generate_graph_keys(7, options);
        merged.insert(merged.end(), part.begin(), part.end());
    }
    std::sort(merged.begin(), merged.end());
    CHECK(merged == full);

    const GenerateOptions parsed = parse_shard_descriptor("6 0 37");
    CHECK(parsed.shard_depth == 6);
    CHECK(parsed.shard_begin == 0);
    CHECK(parsed.shard_end == 37);
    CHECK_THROWS_AS(parse_shard_descriptor("nonsense"), ParseError);
}

TEST_CASE("streaming interface emits canonical representatives in order") {
    std::vector<std::string> seen;
    generate_graphs(4, {}, [&](const CanonicalGraph& cg) {
        CHECK(to_graph6(cg.graph) == cg.key);
        seen.push_back(cg.key);
    });
    CHECK(seen.size() == 11);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}
