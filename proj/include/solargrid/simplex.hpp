#ifndef SOLARGRID_SIMPLEX_HPP
#define SOLARGRID_SIMPLEX_HPP

#include <string>
#include <vector>

namespace solargrid {

enum class Relation { ge, le };

struct ConstraintRow {
    std::vector<double> coeffs;  // one per variable
    Relation rel = Relation::ge;
    double rhs = 0.0;
    std::string label;  // used in diagnostics, the LP dump and validation
};

/// Minimization problem over variables with implicit lower bounds of zero.
struct LPProblem {
    std::vector<double> objective;
    std::vector<ConstraintRow> rows;
    std::vector<std::string> var_names;
};

enum class SolveStatus { optimal, infeasible, unbounded };

struct LPSolution {
    SolveStatus status = SolveStatus::infeasible;
    std::vector<double> scale_factors;  // optimal variable values (A_1..A_n)
    double objective_value = 0.0;
    double dual_objective = 0.0;        // strong-duality certificate partner
    std::vector<double> dual_values;    // one per constraint row, original orientation
    long iterations = 0;
    std::string detail;  // infeasibility diagnosis (offending row labels)
};

/// Two-phase dense-tableau primal simplex with Bland's anti-cycling rule.
/// Ratio-test ties break toward the lowest basic variable index, so results
/// are deterministic. Feasibility tolerance 1e-7 on the phase-1 optimum.
/// Throws IterationLimit after 10*(rows+cols)^2 pivots.
LPSolution solve_simplex(const LPProblem& problem);

}  // namespace solargrid

#endif
