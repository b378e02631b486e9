#include "spantree/lp.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace spantree {

RegularExcess min_regular_excess(int d) {
    if (d < 3 || d > 11)
        throw PreconditionError("min_regular_excess supports 3 <= d <= 11");
    RegularExcess out;
    out.d = d;
    out.n_min = d % 2 == 0 ? d + 2 : d + 3;
    out.min_excess = static_cast<long long>(d) * out.n_min / 2 - out.n_min + 1;
    return out;
}

namespace {

// Average-cut row for k (valid after any cut of size >= k+1): coefficients
// k+1-2j over j = 1..k. The published display drops the j = 2 term when its
// coefficient k-3 is positive, which relaxes the row; `relaxed` reproduces
// that form.
LpRow average_cut_row(int k, std::size_t width, bool relaxed) {
    LpRow row;
    row.coefficients.assign(width, BigRational(0));
    row.relation = Relation::less_equal;
    row.rhs = 0;
    row.coefficients[0] = k - 1;  // j = 1
    if (!relaxed || k - 3 <= 0) row.coefficients[1] = k - 3;
    for (int j = 3; j <= k; ++j) row.coefficients[static_cast<std::size_t>(j - 1)] = k + 1 - 2 * j;
    return row;
}

}  // namespace

LinearProgram build_lp(int d, const FactorTable& factors, LpVariant variant,
                       const LpBuildOptions& options) {
    if (d < 3 || d > 11) throw PreconditionError("build_lp supports 3 <= d <= 11");
    for (int c = 2; c <= d; ++c)
        if (!factors.covers(c, d))
            throw PreconditionError("build_lp: factor table does not cover c = " +
                                    std::to_string(c));

    LinearProgram lp;
    lp.d = d;
    lp.variant = variant;
    const bool improved = variant == LpVariant::improved;
    const bool relaxed_rows = variant == LpVariant::basic || variant == LpVariant::nonregular;
    const std::size_t width = static_cast<std::size_t>(d) + (improved ? 1 : 0);
    const std::size_t special = static_cast<std::size_t>(d);  // index of x2' when present

    for (int c = 1; c <= d; ++c) lp.variable_names.push_back("x" + std::to_string(c));
    if (improved) lp.variable_names.push_back("x2'");

    lp.objective.assign(width, BigRational(0));
    for (int c = 2; c <= d; ++c)
        lp.objective[static_cast<std::size_t>(c - 1)] = log_lower_grid(factors.value(c, d));
    if (improved) lp.objective[special] = log_lower_grid(BigRational(3));

    int small_d = -1;
    int avg_rows_up_to = d - 1;
    if (variant == LpVariant::nonregular) {
        small_d = options.small_d;
        if (small_d < 0) {
            const LinearProgram inner = build_lp(d, factors, LpVariant::improved);
            const LpSolution sol = solve_lp(inner);
            if (sol.status != LpStatus::optimal)
                throw Error("build_lp: improved program failed to solve while deriving small_d");
            small_d = small_d_of(d, exp(to_real(sol.objective)), factors);
        }
        lp.small_d = small_d;
        avg_rows_up_to = std::min(d - 1, small_d + 1);
    }

    for (int k = 2; k <= avg_rows_up_to; ++k)
        lp.rows.push_back(average_cut_row(k, width, relaxed_rows));

    LpRow excess;
    excess.coefficients.assign(width, BigRational(0));
    for (int c = 1; c <= d; ++c) excess.coefficients[static_cast<std::size_t>(c - 1)] = c - 1;
    if (improved) excess.coefficients[special] = 1;  // x2' cuts carry one excess unit
    excess.relation = Relation::greater_equal;
    excess.rhs = 1;
    lp.rows.push_back(std::move(excess));

    const RegularExcess regular = min_regular_excess(d);
    if (variant == LpVariant::nonregular) {
        LpRow none;  // initial cut below d: no d-cut at all
        none.coefficients.assign(width, BigRational(0));
        none.coefficients[static_cast<std::size_t>(d - 1)] = 1;
        none.relation = Relation::equal;
        none.rhs = 0;
        lp.rows.push_back(std::move(none));
    } else {
        LpRow cap;
        cap.coefficients.assign(width, BigRational(0));
        cap.coefficients[static_cast<std::size_t>(d - 1)] = regular.min_excess;
        cap.relation = Relation::less_equal;
        cap.rhs = 1;
        lp.rows.push_back(std::move(cap));
    }

    if (improved) {
        // x2' is added alongside x2 in every row where x2 appears
        for (auto& row : lp.rows)
            if (row.coefficients[1] != 0) row.coefficients[special] = row.coefficients[1];
    }

    const bool sum_row = variant == LpVariant::regular || improved ||
                         (variant == LpVariant::basic && options.include_sum_row);
    if (sum_row) {
        LpRow total;  // total cuts per excess unit: (n-1)/mu, smallest at n_min
        total.coefficients.assign(width, BigRational(1));
        total.relation = Relation::greater_equal;
        total.rhs = BigRational(regular.n_min - 1, regular.min_excess);
        lp.rows.push_back(std::move(total));
        lp.has_sum_row = true;
    }

    if (improved) {
        LpRow link;  // x_d <= x2'
        link.coefficients.assign(width, BigRational(0));
        link.coefficients[static_cast<std::size_t>(d - 1)] = 1;
        link.coefficients[special] = -1;
        link.relation = Relation::less_equal;
        link.rhs = 0;
        lp.rows.push_back(std::move(link));
    }
    return lp;
}

namespace {

// Dense exact simplex working storage.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // structural + slack + artificial (rhs kept apart)
    std::vector<std::vector<BigRational>> a;
    std::vector<BigRational> rhs;
    std::vector<int> basis;
    std::vector<char> locked;  // columns barred from entering (artificials in phase 2)

    void pivot(std::size_t r, std::size_t c) {
        const BigRational p = a[r][c];
        for (auto& v : a[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const BigRational factor = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
            rhs[i] -= factor * rhs[r];
        }
        basis[r] = static_cast<int>(c);
    }
};

// Bland's rule; returns false when the cost cannot decrease further.
// Throws on unboundedness.
bool simplex_iterate(Tableau& t, const std::vector<BigRational>& cost) {
    // reduced costs: c_j - c_B B^-1 a_j; the tableau already stores B^-1 a_j
    std::vector<BigRational> basic_cost(t.rows);
    for (std::size_t i = 0; i < t.rows; ++i)
        basic_cost[i] = cost[static_cast<std::size_t>(t.basis[i])];

    for (std::size_t j = 0; j < t.cols; ++j) {
        if (t.locked[j]) continue;
        bool is_basic = false;
        for (std::size_t i = 0; i < t.rows; ++i)
            if (t.basis[i] == static_cast<int>(j)) is_basic = true;
        if (is_basic) continue;
        BigRational reduced = cost[j];
        for (std::size_t i = 0; i < t.rows; ++i)
            if (t.a[i][j] != 0) reduced -= basic_cost[i] * t.a[i][j];
        if (reduced >= 0) continue;

        // ratio test; ties resolved toward the smallest basis index
        std::size_t leave = t.rows;
        BigRational best_ratio;
        for (std::size_t i = 0; i < t.rows; ++i) {
            if (t.a[i][j] <= 0) continue;
            const BigRational ratio = t.rhs[i] / t.a[i][j];
            if (leave == t.rows || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == t.rows) throw Error("simplex: unbounded direction");
        t.pivot(leave, j);
        return true;
    }
    return false;
}

BigRational objective_value(const Tableau& t, const std::vector<BigRational>& cost) {
    BigRational total(0);
    for (std::size_t i = 0; i < t.rows; ++i)
        total += cost[static_cast<std::size_t>(t.basis[i])] * t.rhs[i];
    return total;
}

// Exact solve of y^T A_B = c_B for the dual multipliers.
std::vector<BigRational> dual_from_basis(const Tableau& t, const std::vector<BigRational>& cost,
                                         const std::vector<std::vector<BigRational>>& original_cols) {
    const std::size_t m = t.rows;
    // columns of the basis in the *original* (untransformed) tableau
    std::vector<std::vector<BigRational>> system(m, std::vector<BigRational>(m + 1, BigRational(0)));
    // equations: sum_i y_i * A_orig[i][basis_col] = cost[basis_col]
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t col = static_cast<std::size_t>(t.basis[k]);
        for (std::size_t i = 0; i < m; ++i) system[k][i] = original_cols[i][col];
        system[k][m] = cost[col];
    }
    // Gaussian elimination
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        while (p < m && system[p][c] == 0) ++p;
        if (p == m) throw Error("simplex: singular basis while extracting the dual");
        std::swap(system[p], system[c]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || system[r][c] == 0) continue;
            const BigRational f = system[r][c] / system[c][c];
            for (std::size_t j = c; j <= m; ++j) system[r][j] -= f * system[c][j];
        }
    }
    std::vector<BigRational> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = system[i][m] / system[i][i];
    return y;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();
    for (const auto& row : lp.rows)
        if (row.coefficients.size() != n) throw PreconditionError("solve_lp: ragged row");

    // transformed rows with nonnegative rhs
    std::vector<int> sign(m, 1);
    std::size_t slack_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.rows[i].rhs < 0) sign[i] = -1;
        if (lp.rows[i].relation != Relation::equal) ++slack_count;
    }

    Tableau t;
    t.rows = m;
    t.cols = n + slack_count + m;  // artificials for every row keep the basis simple
    t.a.assign(m, std::vector<BigRational>(t.cols, BigRational(0)));
    t.rhs.assign(m, BigRational(0));
    t.basis.assign(m, 0);
    t.locked.assign(t.cols, 0);

    std::size_t slack_at = n;
    const std::size_t art_at = n + slack_count;
    std::vector<char> is_artificial(t.cols, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        for (std::size_t j = 0; j < n; ++j) t.a[i][j] = sign[i] * row.coefficients[j];
        t.rhs[i] = sign[i] * row.rhs;
        if (row.relation != Relation::equal) {
            // <= gets +1 slack, >= gets -1 surplus; both flip with the row sign
            const int s = row.relation == Relation::less_equal ? 1 : -1;
            t.a[i][slack_at] = s * sign[i];
            ++slack_at;
        }
        t.a[i][art_at + i] = 1;
        is_artificial[art_at + i] = 1;
        t.basis[i] = static_cast<int>(art_at + i);
    }

    // phase 1: drive the artificials to zero
    std::vector<BigRational> phase1(t.cols, BigRational(0));
    for (std::size_t j = 0; j < t.cols; ++j)
        if (is_artificial[j]) phase1[j] = 1;
    while (simplex_iterate(t, phase1)) {}
    LpSolution solution;
    if (objective_value(t, phase1) != 0) {
        solution.status = LpStatus::infeasible;
        return solution;
    }

    // phase 2: original objective, artificials barred from entering
    for (std::size_t j = 0; j < t.cols; ++j)
        if (is_artificial[j]) t.locked[j] = 1;
    std::vector<BigRational> phase2(t.cols, BigRational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
    try {
        while (simplex_iterate(t, phase2)) {}
    } catch (const Error&) {
        solution.status = LpStatus::unbounded;
        return solution;
    }

    solution.status = LpStatus::optimal;
    solution.primal.assign(n, BigRational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < static_cast<int>(n))
            solution.primal[static_cast<std::size_t>(t.basis[i])] = t.rhs[i];
    solution.objective = objective_value(t, phase2);

    // dual multipliers from the optimal basis, mapped back through the
    // row negations
    std::vector<std::vector<BigRational>> original_cols(m, std::vector<BigRational>(t.cols, BigRational(0)));
    {
        std::size_t s_at = n;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) original_cols[i][j] = sign[i] * lp.rows[i].coefficients[j];
            if (lp.rows[i].relation != Relation::equal) {
                const int s = lp.rows[i].relation == Relation::less_equal ? 1 : -1;
                original_cols[i][s_at] = s * sign[i];
                ++s_at;
            }
            original_cols[i][art_at + i] = 1;
        }
    }
    const std::vector<BigRational> y = dual_from_basis(t, phase2, original_cols);
    solution.dual.assign(m, BigRational(0));
    for (std::size_t i = 0; i < m; ++i) solution.dual[i] = sign[i] * y[i];

    if (!verify_certificate(lp, solution))
        throw Error("solve_lp: certificate verification failed");
    return solution;
}

bool verify_certificate(const LinearProgram& lp, const LpSolution& solution) {
    if (solution.status != LpStatus::optimal) return false;
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rows.size();
    if (solution.primal.size() != n || solution.dual.size() != m) return false;

    for (const auto& x : solution.primal)
        if (x < 0) return false;
    BigRational primal_value(0);
    for (std::size_t j = 0; j < n; ++j) primal_value += lp.objective[j] * solution.primal[j];
    if (primal_value != solution.objective) return false;

    for (std::size_t i = 0; i < m; ++i) {
        BigRational lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i].coefficients[j] * solution.primal[j];
        switch (lp.rows[i].relation) {
            case Relation::less_equal:
                if (!(lhs <= lp.rows[i].rhs)) return false;
                if (solution.dual[i] > 0) return false;
                break;
            case Relation::greater_equal:
                if (!(lhs >= lp.rows[i].rhs)) return false;
                if (solution.dual[i] < 0) return false;
                break;
            case Relation::equal:
                if (lhs != lp.rows[i].rhs) return false;
                break;
        }
    }

    // dual feasibility: A^T y <= c componentwise (x >= 0)
    for (std::size_t j = 0; j < n; ++j) {
        BigRational col(0);
        for (std::size_t i = 0; i < m; ++i) col += solution.dual[i] * lp.rows[i].coefficients[j];
        if (!(col <= lp.objective[j])) return false;
    }

    // zero duality gap
    BigRational dual_value(0);
    for (std::size_t i = 0; i < m; ++i) dual_value += solution.dual[i] * lp.rows[i].rhs;
    return dual_value == solution.objective;
}

int small_d_of(int d, const Real& claimed_bound, const FactorTable& factors) {
    if (!(claimed_bound > 1)) throw PreconditionError("small_d_of: bound must exceed 1");
    int s = 1;
    for (int c = 2; c <= d; ++c) {
        if (!(to_real(factors.value(c, d)) >= pow(claimed_bound, c - 1))) break;
        s = c;
    }
    return s;
}

BetaBounds beta_bounds(int d, const FactorTable& factors) {
    if (d < 3 || d > 11) throw PreconditionError("beta_bounds supports 3 <= d <= 11");
    BetaBounds out;
    out.d = d;
    out.upper = pow(Real(d + 1), Real(2) / d);
    if (d == 3) {
        // exact closed argument: 3 f_{3,3} = 16 and f_{2,3}^3 > 16
        if (BigRational(3) * factors.value(3, 3) != 16)
            throw Error("beta_bounds: 3 f_{3,3} != 16");
        if (!(rational_pow(factors.value(2, 3), 3) > 16))
            throw Error("beta_bounds: f_{2,3} does not exceed 16^(1/3)");
        out.lower = exp(log(Real(16)) / 3);
        out.lp_based = false;
        return out;
    }
    const LinearProgram lp = build_lp(d, factors, LpVariant::improved);
    out.solution = solve_lp(lp);
    if (out.solution.status != LpStatus::optimal)
        throw Error("beta_bounds: improved program did not reach optimality");
    out.lower = exp(to_real(out.solution.objective));
    out.lp_based = true;
    return out;
}

std::string lp_to_text(const LinearProgram& lp) {
    std::ostringstream out;
    out << "minimise";
    bool first = true;
    for (std::size_t j = 0; j < lp.objective.size(); ++j) {
        if (lp.objective[j] == 0) continue;
        out << (first ? " " : " + ") << format_decimal(lp.objective[j], 6) << ' '
            << lp.variable_names[j];
        first = false;
    }
    out << "\nsubject to\n";
    for (const auto& row : lp.rows) {
        bool lead = true;
        for (std::size_t j = 0; j < row.coefficients.size(); ++j) {
            const auto& a = row.coefficients[j];
            if (a == 0) continue;
            if (lead) {
                if (a < 0) out << "-";
                lead = false;
            } else {
                out << (a < 0 ? " - " : " + ");
            }
            const BigRational mag = a < 0 ? BigRational(-a) : a;
            if (mag != 1) out << mag << ' ';
            out << lp.variable_names[j];
        }
        const char* rel = row.relation == Relation::less_equal
                              ? "<="
                              : (row.relation == Relation::greater_equal ? ">=" : "=");
        out << ' ' << rel << ' ' << row.rhs << '\n';
    }
    return out.str();
}

std::string lp_to_json(const LinearProgram& lp, const LpSolution* solution) {
    nlohmann::json j;
    j["d"] = lp.d;
    switch (lp.variant) {
        case LpVariant::basic: j["variant"] = "basic"; break;
        case LpVariant::regular: j["variant"] = "regular"; break;
        case LpVariant::improved: j["variant"] = "improved"; break;
        case LpVariant::nonregular: j["variant"] = "nonregular"; break;
    }
    j["variables"] = lp.variable_names;
    auto rational = [](const BigRational& q) {
        return nlohmann::json{{"n", numerator(q).str()}, {"d", denominator(q).str()}};
    };
    for (const auto& c : lp.objective) j["objective"].push_back(rational(c));
    for (const auto& row : lp.rows) {
        nlohmann::json r;
        for (const auto& c : row.coefficients) r["a"].push_back(rational(c));
        r["rel"] = row.relation == Relation::less_equal
                       ? "<="
                       : (row.relation == Relation::greater_equal ? ">=" : "=");
        r["rhs"] = rational(row.rhs);
        j["rows"].push_back(std::move(r));
    }
    if (lp.small_d >= 0) j["small_d"] = lp.small_d;
    if (solution) {
        nlohmann::json s;
        s["status"] = solution->status == LpStatus::optimal
                          ? "optimal"
                          : (solution->status == LpStatus::infeasible ? "infeasible" : "unbounded");
        if (solution->status == LpStatus::optimal) {
            for (const auto& x : solution->primal) s["primal"].push_back(rational(x));
            for (const auto& y : solution->dual) s["dual"].push_back(rational(y));
            s["objective"] = rational(solution->objective);
            s["objective_decimal"] = format_decimal(solution->objective, 9);
            s["exp_objective"] = format_decimal(exp(to_real(solution->objective)), 9);
        }
        j["solution"] = std::move(s);
    }
    return j.dump(2);
}

}  // namespace spantree
