#include "spantree/generate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "spantree/graph_io.hpp"

namespace spantree {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SPANTREE_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<int> degree_multiset(const SimpleGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(deg.begin(), deg.end());
    return deg;
}

// Expands one parent; appends the accepted child keys (unsorted).
void expand_parent(const std::string& parent_key, int cap,
                   std::vector<std::string>& accepted) {
    const SimpleGraph parent = parse_graph6(parent_key);
    const int pn = parent.vertex_count();
    const std::vector<int> parent_degrees = degree_multiset(parent);

    // attachment candidates: vertices that can still gain an edge
    std::uint64_t eligible = 0;
    for (int v = 0; v < pn; ++v)
        if (parent.degree(v) < cap) eligible |= std::uint64_t{1} << v;

    std::unordered_set<std::string> seen;
    std::uint64_t subset = eligible;
    while (true) {
        if (std::popcount(subset) <= cap) {
            const SimpleGraph child = parent.with_vertex_added(subset);
            const CanonicalGraph canon = canonical_form(child);
            if (seen.insert(canon.key).second) {
                // canonical deletion: the vertex in the last canonical slot
                int deletion = -1;
                for (int v = 0; v <= pn; ++v)
                    if (canon.labeling[static_cast<std::size_t>(v)] == pn) {
                        deletion = v;
                        break;
                    }
                bool accept;
                if (deletion == pn) {
                    accept = true;  // deleting the added vertex gives back the parent
                } else {
                    std::vector<int> rest;
                    rest.reserve(static_cast<std::size_t>(pn));
                    for (int v = 0; v <= pn; ++v)
                        if (v != deletion) rest.push_back(v);
                    const SimpleGraph sub = child.induced(rest);
                    accept = degree_multiset(sub) == parent_degrees &&
                             canonical_form(sub).key == parent_key;
                }
                if (accept) accepted.push_back(canon.key);
            }
        }
        if (subset == 0) break;
        subset = (subset - 1) & eligible;
    }
}

std::vector<std::string> expand_level(const std::vector<std::string>& parents, int cap,
                                      int threads, bool count_only, std::uint64_t* count_out) {
    std::vector<std::string> children;
    std::uint64_t total = 0;

    const int workers = std::min<int>(std::max(1, threads), std::max<std::size_t>(parents.size(), 1));
    if (workers <= 1 || parents.size() < 2) {
        for (const auto& key : parents) {
            std::vector<std::string> local;
            expand_parent(key, cap, local);
            total += local.size();
            if (!count_only)
                children.insert(children.end(), std::make_move_iterator(local.begin()),
                                std::make_move_iterator(local.end()));
        }
    } else {
        std::vector<std::vector<std::string>> buckets(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
        std::atomic<std::size_t> next{0};
        auto work = [&](int w) {
            std::size_t i;
            while ((i = next.fetch_add(1)) < parents.size()) {
                std::vector<std::string> local;
                expand_parent(parents[i], cap, local);
                counts[static_cast<std::size_t>(w)] += local.size();
                if (!count_only)
                    buckets[static_cast<std::size_t>(w)].insert(
                        buckets[static_cast<std::size_t>(w)].end(),
                        std::make_move_iterator(local.begin()),
                        std::make_move_iterator(local.end()));
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
        for (int w = 0; w < workers; ++w) {
            total += counts[static_cast<std::size_t>(w)];
            if (!count_only)
                children.insert(children.end(),
                                std::make_move_iterator(buckets[static_cast<std::size_t>(w)].begin()),
                                std::make_move_iterator(buckets[static_cast<std::size_t>(w)].end()));
        }
    }

    if (count_out) *count_out = total;
    if (!count_only) std::sort(children.begin(), children.end());
    return children;
}

std::vector<std::string> build_levels(int c, const GenerateOptions& options, bool count_only,
                                      std::uint64_t* final_count) {
    if (c < 1 || c > 11)
        throw PreconditionError("generate_graphs supports 1 <= c <= 11, got " + std::to_string(c));
    const int cap = options.max_deg < 0 ? c - 1 : options.max_deg;
    const int threads = resolve_threads(options.threads);

    std::vector<std::string> level{to_graph6(SimpleGraph(1))};
    if (options.shard_depth == 1 || c == 1) {
        if (options.shard_depth == 1) {
            const auto lo = std::min<std::uint64_t>(options.shard_begin, level.size());
            const auto hi = std::min<std::uint64_t>(options.shard_end, level.size());
            level.assign(level.begin() + static_cast<std::ptrdiff_t>(lo),
                         level.begin() + static_cast<std::ptrdiff_t>(hi));
        }
        if (c == 1) {
            if (final_count) *final_count = level.size();
            return level;
        }
    }

    for (int size = 2; size <= c; ++size) {
        const bool last = size == c;
        std::uint64_t count = 0;
        auto next = expand_level(level, cap, threads, last && count_only, &count);
        if (last && count_only) {
            if (final_count) *final_count = count;
            return {};
        }
        level = std::move(next);
        if (options.shard_depth == size) {
            const auto lo = std::min<std::uint64_t>(options.shard_begin, level.size());
            const auto hi = std::min<std::uint64_t>(options.shard_end, level.size());
            level.assign(level.begin() + static_cast<std::ptrdiff_t>(lo),
                         level.begin() + static_cast<std::ptrdiff_t>(hi));
        }
    }
    if (final_count) *final_count = level.size();
    return level;
}

}  // namespace

std::vector<std::string> generate_graph_keys(int c, const GenerateOptions& options) {
    return build_levels(c, options, false, nullptr);
}

void generate_graphs(int c, const GenerateOptions& options,
                     const std::function<void(const CanonicalGraph&)>& sink) {
    for (const auto& key : generate_graph_keys(c, options)) {
        CanonicalGraph cg;
        cg.graph = parse_graph6(key);
        cg.key = key;
        cg.labeling.resize(static_cast<std::size_t>(c));
        for (int v = 0; v < c; ++v) cg.labeling[static_cast<std::size_t>(v)] = v;
        sink(cg);
    }
}

std::uint64_t count_graphs(int c, const GenerateOptions& options) {
    std::uint64_t count = 0;
    build_levels(c, options, true, &count);
    return count;
}

GenerateOptions parse_shard_descriptor(const std::string& text) {
    std::istringstream in(text);
    GenerateOptions options;
    long long depth = 0, begin = 0, end = 0;
    if (!(in >> depth >> begin >> end) || depth < 1 || begin < 0 || end < begin)
        throw ParseError("shard descriptor must be \"depth begin end\"", 1, 1);
    options.shard_depth = static_cast<int>(depth);
    options.shard_begin = static_cast<std::uint64_t>(begin);
    options.shard_end = static_cast<std::uint64_t>(end);
    return options;
}

}  // namespace spantree
