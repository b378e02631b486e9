#pragma once

#include <string>
#include <vector>

#include "spantree/factors.hpp"
#include "spantree/numeric.hpp"

namespace spantree {

enum class Relation { less_equal, greater_equal, equal };

// basic      - the ten-row system exactly as printed for d = 10: average-cut
//              rows with positive x2 terms dropped, no total-cut row.
// regular    - the full critical-case program (d-regular, initial d-cut):
//              unrelaxed average-cut rows plus the total-cut row
//              sum x_c >= (n_min - 1)/min_excess. Reproduces the published
//              lower-bound table exactly.
// improved   - regular plus the special last-2-cut variable x2' (objective
//              ln 3, x2' >= x_d, counted alongside x2 everywhere).
// nonregular - initial cut below d: x_d = 0 and only the average-cut rows
//              that survive without the opening d-cut.
enum class LpVariant { basic, regular, improved, nonregular };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpRow {
    std::vector<BigRational> coefficients;
    Relation relation = Relation::less_equal;
    BigRational rhs;
};

// Minimization program over nonnegative variables. Objective coefficients
// are certified under-approximations of the true logs, so the optimum is a
// valid lower bound.
struct LinearProgram {
    int d = 0;
    LpVariant variant = LpVariant::basic;
    std::vector<std::string> variable_names;  // x1..xd, then x2' if present
    std::vector<BigRational> objective;
    std::vector<LpRow> rows;
    bool has_sum_row = false;
    int small_d = -1;  // only meaningful for the nonregular variant
};

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    std::vector<BigRational> primal;
    BigRational objective;
    std::vector<BigRational> dual;  // one multiplier per row
};

// Smallest d-regular graph other than K_{d+1} and its excess.
struct RegularExcess {
    int d = 0;
    int n_min = 0;        // d+2 for even d, d+3 for odd d
    long long min_excess = 0;  // d n/2 - n + 1
};

RegularExcess min_regular_excess(int d);

struct LpBuildOptions {
    // Adds the total-cut row to the basic variant (the regular and improved
    // variants always carry it; without it their bound collapses).
    bool include_sum_row = false;
    // Nonregular variant: largest initial cut size handled by induction.
    // Negative means derive it from the improved bound for this d.
    int small_d = -1;
};

LinearProgram build_lp(int d, const FactorTable& factors, LpVariant variant,
                       const LpBuildOptions& options = {});

// Exact-rational two-phase simplex with Bland's rule. Optimal solutions
// carry an exactly verified dual certificate.
LpSolution solve_lp(const LinearProgram& lp);

// Exact re-check: primal feasibility, dual feasibility, and zero duality
// gap at the stored solution.
bool verify_certificate(const LinearProgram& lp, const LpSolution& solution);

// Largest s such that f_{c,d} >= claimed_bound^(c-1) for all 2 <= c <= s.
int small_d_of(int d, const Real& claimed_bound, const FactorTable& factors);

struct BetaBounds {
    int d = 0;
    Real lower;
    Real upper;         // (d+1)^(2/d)
    bool lp_based = false;  // false for d = 3 (closed argument)
    LpSolution solution;    // improved-variant solution when lp_based
};

BetaBounds beta_bounds(int d, const FactorTable& factors);

std::string lp_to_text(const LinearProgram& lp);
std::string lp_to_json(const LinearProgram& lp, const LpSolution* solution = nullptr);

}  // namespace spantree
