#pragma once

#include <string>
#include <vector>

#include "spantree/factors.hpp"
#include "spantree/graph.hpp"
#include "spantree/numeric.hpp"

namespace spantree {

// One step of the dissection: a minimum cut applied to one component.
struct DissectionStep {
    int component = 0;       // id of the component that was cut
    int cut_size = 0;
    std::vector<int> side_a; // smaller side (original vertex labels, sorted)
    std::vector<int> side_b;
    int child_a = 0;         // ids of the resulting components
    int child_b = 0;
};

// Full trace of repeatedly removing a minimum-size cut until only
// singletons remain. Component 0 is the input graph; each cut creates two
// fresh ids.
struct DissectionTrace {
    int d = 0;  // degree bound used
    int n = 0;
    int m = 0;
    std::vector<DissectionStep> cuts;
    std::vector<int> tally;  // tally[c] = number of cuts of size c, index 0 unused

    int total_cuts() const { return static_cast<int>(cuts.size()); }
};

// Runs the dissection under the global minimum-size rule with the pinned
// tie-break (smaller side lexicographically least). Requires a connected
// graph with max degree <= d.
DissectionTrace dissect_graph(const SimpleGraph& g, int d);

// Product of the multipliers f_{c_i, d} over the trace (f_1 = 1), exact.
BigRational multiplier_product(const DissectionTrace& trace, const FactorTable& factors);

struct TraceReport {
    bool pass = false;
    std::vector<std::string> violations;
    BigRational product;       // multiplier product
    BigRational tree_count;    // SP(g)
};

// Validates: (a) SP(g) >= multiplier product; (b) for each k-cut, the
// following smaller cuts average at least k/2; (c) the tally identities
// sum n_c = n - 1 and sum c n_c = m; (d) a size-d first cut only on
// d-regular inputs. Violations are reported, not thrown.
TraceReport validate_trace(const SimpleGraph& g, const DissectionTrace& trace,
                           const FactorTable& factors);

// JSON-lines rendering of a trace (one step object per line).
std::string trace_to_json_lines(const DissectionTrace& trace);

}  // namespace spantree
