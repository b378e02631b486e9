#pragma once

#include <string>
#include <vector>

#include "spantree/cut.hpp"
#include "spantree/factors.hpp"
#include "spantree/graph.hpp"
#include "spantree/numeric.hpp"

namespace spantree {

// Lexicographically greatest partition of `total` whose first part equals
// `cap`, whose parts are all <= cap, and which has at least `min_parts`
// parts. Models the worst-case degree multiset of cut endpoints.
struct GreedyPartition {
    int total = 0;
    int cap = 0;
    int min_parts = 0;
    std::vector<int> parts;  // descending
};

GreedyPartition greedy_partition(int total, int cap, int min_parts);

// One verification condition of the cut lemma: cut size c, degree bound d,
// largest endpoint degrees maxu >= maxv on the two sides.
struct CutCondition {
    int c = 0;
    int d = 0;
    int maxu = 0;
    int maxv = 0;
    GreedyPartition u_partition;  // cap = maxu, min_parts = maxv
    GreedyPartition v_partition;  // cap = maxv, min_parts = maxu
    BigRational bound;            // spanning-tree lower bound coefficient
    BigRational margin;           // bound - f_{c,d}
};

// Worst-case coefficient for the number of spanning trees across the cut:
//   c + (f_maxu - maxu) + (f_maxv - maxv)
//     + (f_2 - 2) * [ 2(C(c,2) - C(maxu,2) - C(maxv,2))
//                     - sum_{i>=2} C(pU_i,2) - sum_{i>=2} C(pV_i,2) ]
BigRational condition_lower_bound(const CutCondition& condition, const FactorTable& factors);

// All conditions with 2 <= c < d <= d_max, maxu >= maxv >= 2 and
// maxu + maxv <= c + 1, with greedy partitions, bounds and margins filled.
std::vector<CutCondition> enumerate_conditions(int d_max, const FactorTable& factors);

struct ConditionReport {
    bool pass = false;
    std::size_t total = 0;
    std::size_t failures = 0;
    BigRational min_margin;
    CutCondition min_margin_condition;
    // the separate c = 2 distinct-endpoints check: 2 f_{2,d} - 2 >= f_{2,d}
    bool two_cut_check_pass = false;
};

ConditionReport verify_conditions(const std::vector<CutCondition>& conditions,
                                  const FactorTable& factors, int d_max);

// CSV of the regenerated condition table (the paper's appendix).
std::string conditions_to_csv(const std::vector<CutCondition>& conditions);

// Empirical check of the cut lemma on a concrete graph and cut:
// SP(G) >= f_{c,d} SP(G1) SP(G2). Preconditions that do not hold (degree
// bound, cut size, connected sides) yield skipped = true, not a failure.
struct EmpiricalCutReport {
    bool skipped = false;
    std::string skip_reason;
    bool pass = false;
    int cut_size = 0;
    BigRational left;   // SP(G)
    BigRational right;  // f_{c,d} SP(G1) SP(G2)
};

EmpiricalCutReport empirical_cut_check(const SimpleGraph& g, const CutResult& cut, int d,
                                       const FactorTable& factors);

}  // namespace spantree
