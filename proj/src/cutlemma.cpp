#include "spantree/cutlemma.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "spantree/matrix_tree.hpp"

namespace spantree {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

BigRational tail_pair_count(const GreedyPartition& p) {
    long long sum = 0;
    for (std::size_t i = 1; i < p.parts.size(); ++i) sum += choose2(p.parts[i]);
    return BigRational(sum);
}

}  // namespace

GreedyPartition greedy_partition(int total, int cap, int min_parts) {
    if (cap < 1) throw PreconditionError("greedy_partition: cap must be positive");
    if (min_parts < 1) min_parts = 1;
    if (cap > total)
        throw PreconditionError("greedy_partition: no partition has first part " +
                                std::to_string(cap) + " when the total is " +
                                std::to_string(total));

    GreedyPartition out;
    out.total = total;
    out.cap = cap;
    out.min_parts = min_parts;

    int remaining = total;
    int prev = cap;
    while (remaining > 0) {
        const int count = static_cast<int>(out.parts.size());
        const int upper = std::min(prev, remaining);
        int chosen = 0;
        for (int p = out.parts.empty() ? cap : upper; p >= (out.parts.empty() ? cap : 1); --p) {
            const int rest = remaining - p;
            const bool ok = rest == 0 ? (count + 1 >= min_parts)
                                      : (rest >= std::max(0, min_parts - (count + 1)));
            if (ok) {
                chosen = p;
                break;
            }
        }
        if (chosen == 0)
            throw PreconditionError("greedy_partition: constraints admit no partition of " +
                                    std::to_string(total) + " with cap " + std::to_string(cap) +
                                    " and at least " + std::to_string(min_parts) + " parts");
        out.parts.push_back(chosen);
        remaining -= chosen;
        prev = chosen;
    }
    if (static_cast<int>(out.parts.size()) < min_parts)
        throw PreconditionError("greedy_partition: constraints admit no partition");
    return out;
}

BigRational condition_lower_bound(const CutCondition& condition, const FactorTable& factors) {
    const int c = condition.c;
    const int d = condition.d;
    const BigRational& f_maxu = factors.value(condition.maxu, d);
    const BigRational& f_maxv = factors.value(condition.maxv, d);
    const BigRational& f_two = factors.value(2, d);

    const BigRational pair_budget(2 * (choose2(c) - choose2(condition.maxu) -
                                       choose2(condition.maxv)));
    const BigRational common = tail_pair_count(condition.u_partition) +
                               tail_pair_count(condition.v_partition);
    return BigRational(c) + (f_maxu - condition.maxu) + (f_maxv - condition.maxv) +
           (f_two - 2) * (pair_budget - common);
}

std::vector<CutCondition> enumerate_conditions(int d_max, const FactorTable& factors) {
    std::vector<CutCondition> out;
    for (int c = 2; c < d_max; ++c)
        for (int d = c + 1; d <= d_max; ++d)
            for (int maxu = 2; maxu <= c; ++maxu)
                for (int maxv = 2; maxv <= maxu; ++maxv) {
                    if (maxu + maxv > c + 1) continue;
                    CutCondition cond;
                    cond.c = c;
                    cond.d = d;
                    cond.maxu = maxu;
                    cond.maxv = maxv;
                    cond.u_partition = greedy_partition(c, maxu, maxv);
                    cond.v_partition = greedy_partition(c, maxv, maxu);
                    cond.bound = condition_lower_bound(cond, factors);
                    cond.margin = cond.bound - factors.value(c, d);
                    out.push_back(std::move(cond));
                }
    return out;
}

ConditionReport verify_conditions(const std::vector<CutCondition>& conditions,
                                  const FactorTable& factors, int d_max) {
    ConditionReport report;
    report.total = conditions.size();
    bool first = true;
    for (const auto& cond : conditions) {
        if (cond.margin < 0) ++report.failures;
        if (first || cond.margin < report.min_margin) {
            report.min_margin = cond.margin;
            report.min_margin_condition = cond;
            first = false;
        }
    }
    // c = 2 with distinct endpoints: (2 f_{2,d} - 2) >= f_{2,d}, i.e. f_{2,d} >= 2
    report.two_cut_check_pass = true;
    for (int d = 3; d <= d_max; ++d)
        if (!(factors.value(2, d) >= 2)) report.two_cut_check_pass = false;
    report.pass = report.failures == 0 && report.two_cut_check_pass;
    return report;
}

std::string conditions_to_csv(const std::vector<CutCondition>& conditions) {
    std::ostringstream out;
    out << "c,d,maxu,maxv,u_partition,v_partition,bound_numerator,bound_denominator,bound,"
           "margin\n";
    auto join = [](const std::vector<int>& parts) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += '+';
            s += std::to_string(parts[i]);
        }
        return s;
    };
    for (const auto& cond : conditions)
        out << cond.c << ',' << cond.d << ',' << cond.maxu << ',' << cond.maxv << ','
            << join(cond.u_partition.parts) << ',' << join(cond.v_partition.parts) << ','
            << numerator(cond.bound).str() << ',' << denominator(cond.bound).str() << ','
            << format_decimal(cond.bound, 6) << ',' << format_decimal(cond.margin, 6) << '\n';
    return out.str();
}

EmpiricalCutReport empirical_cut_check(const SimpleGraph& g, const CutResult& cut, int d,
                                       const FactorTable& factors) {
    EmpiricalCutReport report;
    const int n = g.vertex_count();

    if (cut.side.empty() || static_cast<int>(cut.side.size()) >= n)
        throw PreconditionError("empirical_cut_check: cut side must be nonempty and proper");

    std::uint64_t side_mask = 0;
    for (int v : cut.side) {
        if (v < 0 || v >= n) throw PreconditionError("empirical_cut_check: side vertex out of range");
        side_mask |= std::uint64_t{1} << v;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t rest_mask = all & ~side_mask;

    int crossing = 0;
    for (int v : cut.side) crossing += std::popcount(g.neighbor_mask(v) & rest_mask);
    if (crossing != cut.size)
        throw PreconditionError("empirical_cut_check: declared cut size does not match the side");
    report.cut_size = crossing;

    if (g.max_degree() > d) {
        report.skipped = true;
        report.skip_reason = "maximum degree exceeds d";
        return report;
    }
    if (crossing >= d) {
        report.skipped = true;
        report.skip_reason = "cut size not below d";
        return report;
    }
    if (!g.connected_within(side_mask) || !g.connected_within(rest_mask)) {
        report.skipped = true;
        report.skip_reason = "a side of the cut is disconnected";
        return report;
    }

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if ((rest_mask >> v) & 1) rest.push_back(v);

    const BigRational factor =
        crossing == 0 ? BigRational(0)
                      : (crossing == 1 ? BigRational(1) : factors.value(crossing, d));
    report.left = BigRational(spanning_tree_count(g));
    report.right = factor * BigRational(spanning_tree_count(g.induced(cut.side))) *
                   BigRational(spanning_tree_count(g.induced(rest)));
    report.pass = report.left >= report.right;
    return report;
}

}  // namespace spantree
