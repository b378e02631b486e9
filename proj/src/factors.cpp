#include "spantree/factors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "spantree/canonical.hpp"
#include "spantree/generate.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/matrix_tree.hpp"

namespace spantree {

ApexLimitGraph apex_limit_graph(const SimpleGraph& h, int d) {
    const int c = h.vertex_count();
    if (c < 1) throw PreconditionError("apex_limit_graph: empty subgraph");
    if (c > d)
        throw PreconditionError("apex_limit_graph: need c <= d, got c = " + std::to_string(c) +
                                ", d = " + std::to_string(d));
    if (h.max_degree() > d - 1)
        throw PreconditionError("apex_limit_graph: subgraph degree exceeds d - 1");

    ApexLimitGraph out;
    out.base = h;
    out.degree_bound = d;
    out.apex_weights.reserve(static_cast<std::size_t>(c));
    bool any_positive = false;
    for (int v = 0; v < c; ++v) {
        out.apex_weights.emplace_back(d - 1 - h.degree(v));
        if (out.apex_weights.back() > 0) any_positive = true;
    }
    out.has_apex = any_positive;

    WeightedGraph w(any_positive ? c + 1 : c);
    for (const auto& [u, v] : h.edges()) w.add_edge(u, v, BigRational(1));
    if (any_positive)
        for (int v = 0; v < c; ++v)
            if (out.apex_weights[static_cast<std::size_t>(v)] > 0)
                w.add_edge(v, c, out.apex_weights[static_cast<std::size_t>(v)]);
    if (!w.connected())
        throw PreconditionError("apex_limit_graph: limit graph is disconnected");
    out.limit = std::move(w);
    return out;
}

BigRational factor_of_subgraph(const SimpleGraph& h, int d) {
    const int c = h.vertex_count();
    const ApexLimitGraph apex = apex_limit_graph(h, d);

    std::vector<std::pair<int, BigRational>> attach;
    attach.reserve(static_cast<std::size_t>(c));
    for (int v = 0; v < c; ++v) attach.emplace_back(v, BigRational(1));

    const BigRational denom = weighted_tree_sum(apex.limit);
    const BigRational numer = weighted_tree_sum(apex.limit.with_vertex_added(attach));
    const BigRational f = numer / denom;
    if (c >= 2 && !(f > c))
        throw Error("factor_of_subgraph: multiplier not strictly above the vertex degree");
    return f;
}

BigRational closed_form_f(int c, int d) {
    if (c < 1 || c > d) throw PreconditionError("closed_form_f: need 1 <= c <= d");
    return BigRational(c) * rational_pow(BigRational(d + 1, d), static_cast<unsigned>(c - 1));
}

namespace {

std::vector<int> clique_needs(const SimpleGraph& h, int d) {
    std::vector<int> needs(static_cast<std::size_t>(h.vertex_count()));
    for (int v = 0; v < h.vertex_count(); ++v) {
        const int need = d - 1 - h.degree(v);
        if (need < 0) throw PreconditionError("clique_extension: subgraph degree exceeds d - 1");
        needs[static_cast<std::size_t>(v)] = need;
    }
    return needs;
}

}  // namespace

SimpleGraph clique_extension(const SimpleGraph& h, int d, int k) {
    const int c = h.vertex_count();
    const std::vector<int> needs = clique_needs(h, d);
    const int max_need = needs.empty() ? 0 : *std::max_element(needs.begin(), needs.end());
    if (max_need == 0) return h;  // H already meets the target degrees
    if (k < max_need)
        throw PreconditionError("clique_extension: clique too small for the required edges");
    if (c + k > SimpleGraph::kMaxVertices)
        throw PreconditionError("clique_extension: graph exceeds 64 vertices; use "
                                "clique_extension_factor for large cliques");

    SimpleGraph g(c + k);
    for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) g.add_edge(c + a, c + b);
    for (int v = 0; v < c; ++v)
        for (int j = 0; j < needs[static_cast<std::size_t>(v)]; ++j) g.add_edge(v, c + j);
    return g;
}

BigRational clique_extension_factor(const SimpleGraph& h, int d, int k) {
    const int c = h.vertex_count();
    const std::vector<int> needs = clique_needs(h, d);
    const int max_need = needs.empty() ? 0 : *std::max_element(needs.begin(), needs.end());
    if (k < max_need)
        throw PreconditionError("clique_extension: clique too small for the required edges");

    // vertices: u_0..u_{c-1}, then the clique, then (for the numerator) v
    const int base_n = c + (max_need == 0 ? 0 : k);
    auto spanning_count = [&](bool with_new_vertex) {
        const int n = base_n + (with_new_vertex ? 1 : 0);
        const int dim = n - 1;  // vertex 0 removed
        std::vector<BigInt> lap(static_cast<std::size_t>(dim) * dim, BigInt(0));
        auto add_edge = [&](int a, int b) {
            if (a > 0) ++lap[static_cast<std::size_t>(a - 1) * dim + (a - 1)];
            if (b > 0) ++lap[static_cast<std::size_t>(b - 1) * dim + (b - 1)];
            if (a > 0 && b > 0) {
                --lap[static_cast<std::size_t>(a - 1) * dim + (b - 1)];
                --lap[static_cast<std::size_t>(b - 1) * dim + (a - 1)];
            }
        };
        for (const auto& [u, v] : h.edges()) add_edge(u, v);
        if (max_need > 0) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) add_edge(c + a, c + b);
            for (int v = 0; v < c; ++v)
                for (int j = 0; j < needs[static_cast<std::size_t>(v)]; ++j) add_edge(v, c + j);
        }
        if (with_new_vertex)
            for (int v = 0; v < c; ++v) add_edge(v, base_n);
        return determinant_bareiss(std::move(lap), dim);
    };

    const BigInt denom = spanning_count(false);
    if (denom == 0) throw PreconditionError("clique_extension_factor: extension is disconnected");
    return BigRational(spanning_count(true), denom);
}

bool FactorTable::covers(int c, int d) const {
    if (c == 1) return d <= d_max_;
    return entries_.count({c, d}) > 0;
}

const BigRational& FactorTable::value(int c, int d) const {
    static const BigRational one(1);
    if (c == 1 && d <= d_max_) return one;
    const auto it = entries_.find({c, d});
    if (it == entries_.end())
        throw PreconditionError("factor table does not cover f(" + std::to_string(c) + ", " +
                                std::to_string(d) + ")");
    return it->second.value;
}

const std::string& FactorTable::argmin_key(int c, int d) const {
    const auto it = entries_.find({c, d});
    if (it == entries_.end())
        throw PreconditionError("factor table does not cover f(" + std::to_string(c) + ", " +
                                std::to_string(d) + ")");
    return it->second.argmin_key;
}

void FactorTable::insert(int c, int d, FactorEntry entry) {
    if (c >= 2 && !(entry.value > c))
        throw Error("factor table invariant violated: f <= c at (" + std::to_string(c) + ", " +
                    std::to_string(d) + ")");
    entries_[{c, d}] = std::move(entry);
}

FactorTable FactorTable::closed_form(int d_max) {
    FactorTable table;
    table.c_max_ = d_max;
    table.d_max_ = d_max;
    for (int d = 2; d <= d_max; ++d)
        for (int c = 2; c <= d; ++c)
            table.insert(c, d, {closed_form_f(c, d), canonical_form(SimpleGraph::complete(c)).key});
    return table;
}

FactorTable FactorTable::enumerated(int c_max, int d_max, int threads) {
    if (c_max > d_max) throw PreconditionError("factor table: c_max must not exceed d_max");
    if (d_max > 11) throw PreconditionError("factor table: d_max must not exceed 11");
    FactorTable table;
    table.c_max_ = c_max;
    table.d_max_ = d_max;

    if (threads <= 0) {
        if (const char* env = std::getenv("SPANTREE_THREADS")) threads = std::atoi(env);
        if (threads <= 0) {
            const unsigned hw = std::thread::hardware_concurrency();
            threads = hw == 0 ? 1 : static_cast<int>(hw);
        }
    }

    for (int c = 2; c <= c_max; ++c) {
        // Degree caps never bind for c <= d: a c-vertex subgraph has degree
        // at most c - 1 <= d - 1. One stream serves every d.
        const std::vector<std::string> keys = generate_graph_keys(c);
        const int d_lo = std::max(c, 2);

        struct Best {
            bool set = false;
            BigRational value;
            std::string key;
        };
        const int workers = std::max(1, std::min<int>(threads, static_cast<int>(keys.size())));
        std::vector<std::vector<Best>> local(
            static_cast<std::size_t>(workers),
            std::vector<Best>(static_cast<std::size_t>(d_max - d_lo + 1)));
        std::atomic<std::size_t> cursor{0};

        auto work = [&](int w) {
            std::size_t i;
            while ((i = cursor.fetch_add(1)) < keys.size()) {
                const SimpleGraph h = parse_graph6(keys[i]);
                for (int d = d_lo; d <= d_max; ++d) {
                    const BigRational f = factor_of_subgraph(h, d);
                    Best& b = local[static_cast<std::size_t>(w)][static_cast<std::size_t>(d - d_lo)];
                    if (!b.set || f < b.value || (f == b.value && keys[i] < b.key)) {
                        b.set = true;
                        b.value = f;
                        b.key = keys[i];
                    }
                }
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }

        for (int d = d_lo; d <= d_max; ++d) {
            Best merged;
            for (int w = 0; w < workers; ++w) {
                const Best& b = local[static_cast<std::size_t>(w)][static_cast<std::size_t>(d - d_lo)];
                if (!b.set) continue;
                if (!merged.set || b.value < merged.value ||
                    (b.value == merged.value && b.key < merged.key))
                    merged = b;
            }
            table.insert(c, d, {merged.value, merged.key});
        }
    }
    return table;
}

FactorTable FactorTable::with_value(int c, int d, const BigRational& value) const {
    FactorTable copy = *this;
    const auto it = copy.entries_.find({c, d});
    if (it == copy.entries_.end())
        throw PreconditionError("with_value: cell not present");
    it->second.value = value;
    return copy;
}

std::string FactorTable::to_csv() const {
    std::ostringstream out;
    out << "c,d,numerator,denominator,value,argmin\n";
    for (int d = 2; d <= d_max_; ++d)
        for (int c = 2; c <= std::min(c_max_, d); ++c) {
            if (!covers(c, d)) continue;
            const BigRational& f = value(c, d);
            out << c << ',' << d << ',' << numerator(f).str() << ',' << denominator(f).str()
                << ',' << format_decimal(f, 6) << ',' << argmin_key(c, d) << '\n';
        }
    return out.str();
}

std::string FactorTable::to_text() const {
    std::ostringstream out;
    out << "c    ";
    for (int c = 2; c <= c_max_; ++c) out << c << "          ";
    out << '\n';
    for (int d = std::max(3, 2); d <= d_max_; ++d) {
        out << "d=" << d << (d < 10 ? "  " : " ");
        for (int c = 2; c <= std::min(c_max_, d); ++c)
            out << format_decimal(value(c, d), 6) << "   ";
        out << '\n';
    }
    return out.str();
}

}  // namespace spantree
