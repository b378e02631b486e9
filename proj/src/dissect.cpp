#include "spantree/dissect.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "spantree/cut.hpp"
#include "spantree/matrix_tree.hpp"

namespace spantree {

namespace {

struct PendingComponent {
    int id = 0;
    std::vector<int> vertices;  // sorted, global labels
    CutResult cut;              // side in global labels
};

CutResult component_min_cut(const SimpleGraph& g, const std::vector<int>& vertices) {
    const SimpleGraph sub = g.induced(vertices);
    CutResult local = canonical_min_cut(sub);
    CutResult global;
    global.size = local.size;
    global.side.reserve(local.side.size());
    for (int v : local.side) global.side.push_back(vertices[static_cast<std::size_t>(v)]);
    return global;
}

bool is_regular(const SimpleGraph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

}  // namespace

DissectionTrace dissect_graph(const SimpleGraph& g, int d) {
    if (!g.connected()) throw PreconditionError("dissect_graph requires a connected graph");
    if (g.max_degree() > d)
        throw PreconditionError("dissect_graph: maximum degree exceeds the bound d");

    DissectionTrace trace;
    trace.d = d;
    trace.n = g.vertex_count();
    trace.m = g.edge_count();
    trace.tally.assign(static_cast<std::size_t>(d) + 1, 0);

    std::vector<PendingComponent> active;
    int next_id = 1;
    if (g.vertex_count() >= 2) {
        PendingComponent root;
        root.id = 0;
        root.vertices.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) root.vertices[static_cast<std::size_t>(v)] = v;
        root.cut = component_min_cut(g, root.vertices);
        active.push_back(std::move(root));
    }

    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < active.size(); ++i) {
            const auto& a = active[i].cut;
            const auto& b = active[best].cut;
            if (a.size < b.size || (a.size == b.size && a.side < b.side)) best = i;
        }
        PendingComponent comp = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));

        DissectionStep step;
        step.component = comp.id;
        step.cut_size = comp.cut.size;
        step.side_a = comp.cut.side;
        std::set_difference(comp.vertices.begin(), comp.vertices.end(), step.side_a.begin(),
                            step.side_a.end(), std::back_inserter(step.side_b));
        step.child_a = next_id++;
        step.child_b = next_id++;

        // a minimum cut cannot leave a disconnected side
        for (const auto* side : {&step.side_a, &step.side_b})
            if (!g.induced(*side).connected())
                throw Error("dissect_graph: minimum cut produced a disconnected side");

        const bool first = trace.cuts.empty();
        if (step.cut_size > d || (!first && step.cut_size > d - 1))
            throw Error("dissect_graph: cut size exceeds the degree-bound invariant");
        if (step.cut_size == d && !(first && is_regular(g, d)))
            throw Error("dissect_graph: a size-d cut is only possible first on a d-regular graph");

        ++trace.tally[static_cast<std::size_t>(step.cut_size)];

        for (const auto& [child_id, side] :
             {std::pair{step.child_a, &step.side_a}, std::pair{step.child_b, &step.side_b}}) {
            if (side->size() < 2) continue;
            PendingComponent child;
            child.id = child_id;
            child.vertices = *side;
            child.cut = component_min_cut(g, child.vertices);
            active.push_back(std::move(child));
        }
        trace.cuts.push_back(std::move(step));
    }
    return trace;
}

BigRational multiplier_product(const DissectionTrace& trace, const FactorTable& factors) {
    BigRational product(1);
    for (const auto& step : trace.cuts) {
        if (step.cut_size <= 1) continue;  // f_1 = 1
        product *= factors.value(step.cut_size, trace.d);
    }
    return product;
}

TraceReport validate_trace(const SimpleGraph& g, const DissectionTrace& trace,
                           const FactorTable& factors) {
    TraceReport report;
    report.tree_count = BigRational(spanning_tree_count(g));
    report.product = multiplier_product(trace, factors);

    if (!(report.tree_count >= report.product))
        report.violations.push_back("spanning-tree count falls below the multiplier product");

    // average cut lemma per antecedent cut
    for (std::size_t i = 0; i < trace.cuts.size(); ++i) {
        const int k = trace.cuts[i].cut_size;
        if (k < 2) continue;
        long long sum = 0, count = 0;
        for (std::size_t j = i + 1; j < trace.cuts.size(); ++j)
            if (trace.cuts[j].cut_size < k) {
                sum += trace.cuts[j].cut_size;
                ++count;
            }
        if (count > 0 && 2 * sum < static_cast<long long>(k) * count)
            report.violations.push_back("average size of cuts below " + std::to_string(k) +
                                        " after step " + std::to_string(i) + " is under k/2");
    }

    // tally identities
    std::vector<int> recount(trace.tally.size(), 0);
    for (const auto& step : trace.cuts)
        if (step.cut_size >= 0 && step.cut_size < static_cast<int>(recount.size()))
            ++recount[static_cast<std::size_t>(step.cut_size)];
    if (recount != trace.tally) report.violations.push_back("tally does not match the cut list");
    long long total = 0, weighted = 0;
    for (std::size_t c = 1; c < trace.tally.size(); ++c) {
        total += trace.tally[c];
        weighted += static_cast<long long>(c) * trace.tally[c];
    }
    if (total != trace.n - 1)
        report.violations.push_back("total cut count differs from n - 1");
    if (weighted != trace.m)
        report.violations.push_back("total removed edges differ from m");

    // size-d cuts: only the first step, and only on regular inputs
    for (std::size_t i = 0; i < trace.cuts.size(); ++i)
        if (trace.cuts[i].cut_size == trace.d && (i != 0 || !is_regular(g, trace.d)))
            report.violations.push_back("size-d cut in a position the rule forbids");

    report.pass = report.violations.empty();
    return report;
}

std::string trace_to_json_lines(const DissectionTrace& trace) {
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.cuts.size(); ++i) {
        const auto& step = trace.cuts[i];
        nlohmann::json line{{"step", i},
                            {"component", step.component},
                            {"cut_size", step.cut_size},
                            {"side_a", step.side_a},
                            {"side_b", step.side_b},
                            {"children", {step.child_a, step.child_b}}};
        out << line.dump() << '\n';
    }
    return out.str();
}

}  // namespace spantree
