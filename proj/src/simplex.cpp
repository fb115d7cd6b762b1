#include "solargrid/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "solargrid/errors.hpp"

namespace solargrid {

namespace {

constexpr double kPivotEps = 1e-9;   // reduced-cost / pivot-eligibility tolerance
constexpr double kFeasEps = 1e-7;    // phase-1 optimum threshold
constexpr long kBlandTrigger = 20;   // degenerate pivots before Bland pricing kicks in

// Column order: structural (0..n-1), aux (slack/surplus, n..n+m-1),
// artificial (n+m..). Bland's rule picks the lowest eligible index, so
// structural variables are preferred, then aux, then artificial.
class Tableau {
  public:
    explicit Tableau(const LPProblem& p) : n_(p.objective.size()), m_(p.rows.size()) {
        flipped_.assign(m_, false);
        aux_is_slack_.assign(m_, false);
        art_col_.assign(m_, -1);

        // Count artificials: one per >=-oriented row after rhs normalization.
        size_t n_art = 0;
        for (size_t i = 0; i < m_; ++i) {
            const auto& row = p.rows[i];
            const bool flip = row.rhs < 0.0;
            flipped_[i] = flip;
            Relation rel = row.rel;
            if (flip) rel = rel == Relation::ge ? Relation::le : Relation::ge;
            aux_is_slack_[i] = rel == Relation::le;
            if (!aux_is_slack_[i]) ++n_art;
        }
        ncols_ = n_ + m_ + n_art;
        a_.assign(m_, std::vector<double>(ncols_ + 1, 0.0));
        basis_.assign(m_, 0);

        size_t art = n_ + m_;
        for (size_t i = 0; i < m_; ++i) {
            const auto& row = p.rows[i];
            const double sign = flipped_[i] ? -1.0 : 1.0;
            for (size_t j = 0; j < n_; ++j) a_[i][j] = sign * row.coeffs[j];
            a_[i][ncols_] = sign * row.rhs;
            if (aux_is_slack_[i]) {
                a_[i][n_ + i] = 1.0;
                basis_[i] = n_ + i;
            } else {
                a_[i][n_ + i] = -1.0;  // surplus
                a_[i][art] = 1.0;
                art_col_[i] = static_cast<long>(art);
                basis_[i] = art;
                ++art;
            }
        }

        // Phase-2 cost row: original objective, rhs cell accumulates -obj.
        cost_.assign(ncols_ + 1, 0.0);
        for (size_t j = 0; j < n_; ++j) cost_[j] = p.objective[j];

        // Phase-1 cost row: sum of artificials, priced out over the basis.
        phase1_.assign(ncols_ + 1, 0.0);
        for (size_t i = 0; i < m_; ++i)
            if (art_col_[i] >= 0) phase1_[static_cast<size_t>(art_col_[i])] = 1.0;
        for (size_t i = 0; i < m_; ++i)
            if (art_col_[i] >= 0)
                for (size_t j = 0; j <= ncols_; ++j) phase1_[j] -= a_[i][j];

        max_pivots_ = 10 * static_cast<long>((m_ + ncols_) * (m_ + ncols_));
    }

    size_t n_structural() const { return n_; }
    size_t first_artificial() const { return n_ + m_; }
    long iterations() const { return iterations_; }

    bool is_artificial(size_t col) const { return col >= n_ + m_; }

    // Returns false when the entering column admits no pivot (unbounded).
    // Artificial columns never enter; they only start out basic.
    //
    // Pricing is Dantzig (most negative reduced cost) while the objective
    // makes progress; a run of degenerate pivots switches to Bland's rule,
    // whose lowest-index discipline breaks any cycle, and progress switches
    // back. Pure Bland pricing is avoided off the degenerate stretches
    // because it habitually picks near-zero pivot elements and the dense
    // tableau then loses all precision.
    bool run_phase(std::vector<double>& cost) {
        long degenerate_run = 0;
        for (;;) {
            const bool bland = degenerate_run >= kBlandTrigger;
            size_t enter = ncols_;
            double most_negative = -kPivotEps;
            for (size_t j = 0; j < first_artificial(); ++j) {
                if (cost[j] < most_negative) {
                    enter = j;
                    if (bland) break;  // lowest eligible index
                    most_negative = cost[j];
                }
            }
            if (enter == ncols_) return true;  // optimal for this phase

            double best_ratio = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= kPivotEps) continue;
                best_ratio = std::min(best_ratio, a_[i][ncols_] / a_[i][enter]);
            }
            if (best_ratio == std::numeric_limits<double>::infinity())
                return false;  // unbounded direction

            // Ties break toward the lowest basic variable index.
            size_t leave = m_;
            const double tie = best_ratio + kPivotEps * (1.0 + std::abs(best_ratio));
            for (size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= kPivotEps) continue;
                if (a_[i][ncols_] / a_[i][enter] > tie) continue;
                if (leave == m_ || basis_[i] < basis_[leave]) leave = i;
            }
            const double obj_before = cost[ncols_];
            pivot(leave, enter);
            // A degenerate pivot leaves the objective cell exactly unchanged
            // (the pivot row's rhs is zero).
            degenerate_run = cost[ncols_] == obj_before ? degenerate_run + 1 : 0;
        }
    }

    double phase1_objective() const { return -phase1_[ncols_]; }
    std::vector<double>& phase1_cost() { return phase1_; }
    std::vector<double>& phase2_cost() { return cost_; }

    // Pivot zero-level artificials out of the basis where possible; rows that
    // are zero across all real columns are redundant and stay inert.
    void drive_out_artificials() {
        for (size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (size_t j = 0; j < n_ + m_; ++j) {
                if (std::abs(a_[i][j]) > kFeasEps) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<double> primal_solution() const {
        std::vector<double> x(n_, 0.0);
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = a_[i][ncols_];
        return x;
    }

    // Duals for the normalized rows, recovered from the aux-column reduced
    // costs: slack column carries -y_i, surplus column carries +y_i.
    std::vector<double> duals_normalized() const {
        std::vector<double> y(m_, 0.0);
        for (size_t i = 0; i < m_; ++i)
            y[i] = aux_is_slack_[i] ? -cost_[n_ + i] : cost_[n_ + i];
        return y;
    }

    bool row_flipped(size_t i) const { return flipped_[i]; }

    // Rows whose artificial is still basic above tolerance (infeasibility).
    std::vector<size_t> violated_rows() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < m_; ++i)
            if (is_artificial(basis_[i]) && a_[i][ncols_] > kFeasEps) out.push_back(i);
        return out;
    }

  private:
    void pivot(size_t r, size_t s) {
        if (++iterations_ > max_pivots_) throw IterationLimit(max_pivots_);
        const double inv = 1.0 / a_[r][s];
        for (size_t j = 0; j <= ncols_; ++j) a_[r][j] *= inv;
        a_[r][s] = 1.0;  // kill residual rounding on the pivot cell
        auto eliminate = [&](std::vector<double>& row) {
            const double f = row[s];
            if (f == 0.0) return;
            for (size_t j = 0; j <= ncols_; ++j) row[j] -= f * a_[r][j];
            row[s] = 0.0;
        };
        for (size_t i = 0; i < m_; ++i)
            if (i != r) eliminate(a_[i]);
        eliminate(cost_);
        eliminate(phase1_);
        basis_[r] = s;
    }

    size_t n_, m_, ncols_ = 0;
    std::vector<std::vector<double>> a_;
    std::vector<size_t> basis_;
    std::vector<double> cost_, phase1_;
    std::vector<bool> flipped_, aux_is_slack_;
    std::vector<long> art_col_;
    long iterations_ = 0;
    long max_pivots_ = 0;
};

}  // namespace

namespace {

// Nearest power of two to 1/x; exact to multiply by, so scaling introduces no
// rounding at all.
double pow2_inverse(double x) {
    if (!(x > 0.0)) return 1.0;
    return std::exp2(std::round(-std::log2(x)));
}

}  // namespace

LPSolution solve_simplex(const LPProblem& problem) {
    const size_t n = problem.objective.size();
    const size_t m = problem.rows.size();

    // Equilibrate columns, then rows, then the cost row, so the absolute
    // pivot and feasibility tolerances are meaningful regardless of the
    // original units (production coefficients sit orders of magnitude below
    // the consumption right-hand sides).
    std::vector<double> col_scale(n, 1.0);
    for (size_t j = 0; j < n; ++j) {
        double colmax = 0.0;
        for (const auto& row : problem.rows)
            colmax = std::max(colmax, std::abs(row.coeffs[j]));
        col_scale[j] = pow2_inverse(colmax);
    }
    LPProblem scaled = problem;
    std::vector<double> row_scale(m, 1.0);
    for (size_t i = 0; i < m; ++i) {
        auto& row = scaled.rows[i];
        double rowmax = 0.0;
        for (size_t j = 0; j < n; ++j) {
            row.coeffs[j] *= col_scale[j];
            rowmax = std::max(rowmax, std::abs(row.coeffs[j]));
        }
        row_scale[i] = pow2_inverse(rowmax);
        for (double& a : row.coeffs) a *= row_scale[i];
        row.rhs *= row_scale[i];
    }
    double costmax = 0.0;
    for (size_t j = 0; j < n; ++j) {
        scaled.objective[j] *= col_scale[j];
        costmax = std::max(costmax, std::abs(scaled.objective[j]));
    }
    const double obj_scale = pow2_inverse(costmax);
    for (double& c : scaled.objective) c *= obj_scale;

    Tableau t(scaled);
    LPSolution sol;

    // Phase 1 minimizes the artificial sum; it is bounded below by zero, so
    // an unbounded return would indicate a broken tableau.
    if (!t.run_phase(t.phase1_cost()))
        throw std::logic_error("phase-1 subproblem reported unbounded");
    if (t.phase1_objective() > kFeasEps) {
        sol.status = SolveStatus::infeasible;
        sol.iterations = t.iterations();
        std::string detail = "unsatisfiable row(s):";
        for (size_t i : t.violated_rows()) {
            const auto& label = problem.rows[i].label;
            detail += " [" + (label.empty() ? "#" + std::to_string(i) : label) + "]";
        }
        sol.detail = detail;
        return sol;
    }
    t.drive_out_artificials();

    if (!t.run_phase(t.phase2_cost())) {
        sol.status = SolveStatus::unbounded;
        sol.iterations = t.iterations();
        return sol;
    }

    sol.status = SolveStatus::optimal;
    sol.iterations = t.iterations();
    sol.scale_factors = t.primal_solution();
    for (size_t j = 0; j < n; ++j) sol.scale_factors[j] *= col_scale[j];
    sol.objective_value = 0.0;
    for (size_t j = 0; j < n; ++j)
        sol.objective_value += problem.objective[j] * sol.scale_factors[j];

    const std::vector<double> y = t.duals_normalized();
    sol.dual_values.resize(m);
    sol.dual_objective = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const double y_i = (t.row_flipped(i) ? -y[i] : y[i]) * row_scale[i] / obj_scale;
        sol.dual_values[i] = y_i;
        // y'b over normalized rows equals y_orig'b_orig.
        sol.dual_objective += y_i * problem.rows[i].rhs;
    }
    return sol;
}

}  // namespace solargrid
