#ifndef SOLARGRID_OPTIMIZER_HPP
#define SOLARGRID_OPTIMIZER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "solargrid/scenario.hpp"
#include "solargrid/simplex.hpp"

namespace solargrid {

/// Per-location production-share constraints, as fractions of the location's
/// own daily consumption. Both absent reproduces the unconstrained case.
struct ConstraintPolicy {
    std::optional<double> min_fraction;  // e.g. 0.4
    std::optional<double> max_fraction;  // e.g. 4.0
};

/// Policies of the four canonical experiments:
///   1: none, 2: min 40%, 3: max 400%, 4: 40%..400%.
ConstraintPolicy experiment_policy(int experiment);

/// Minimum-total-area LP:
///   min sum_i unit_area * A_i
///   s.t. sum_i P[t][i]*A_i >= sum_i C[t][i]           (t = 1..24)
///        (sum_t P[t][i])*A_i >= f*(sum_t C[t][i])      per i, when min_fraction f
///        (sum_t P[t][i])*A_i <= g*(sum_t C[t][i])      per i, when max_fraction g
///        A >= 0
/// Throws EmptyScenario when the scenario has no locations.
LPProblem build_lp(const ScenarioMatrices& m, const ConstraintPolicy& policy,
                   double unit_area);

/// Structured infeasibility screen: a location with zero daily production
/// cannot meet a positive minimum-share requirement. Returns the diagnosis
/// instead of letting the solver report a bare infeasible.
std::optional<std::string> diagnose_structural_infeasibility(
    const ScenarioMatrices& m, const ConstraintPolicy& policy);

struct ValidationReport {
    bool pass = false;
    std::array<double, 24> hourly_surplus_mwh{};
    int min_slack_hour = 1;       // 1..24
    double min_slack_mwh = 0.0;
    std::vector<double> energy_shares;      // per location; 0 when consumption is 0
    std::vector<std::string> violations;    // labels of violated constraint rows
};

/// Recompute every constraint from the raw matrices (independent of solver
/// internals); pass iff each row holds within 1e-6 relative tolerance.
ValidationReport validate_solution(const ScenarioMatrices& m, const LPSolution& sol,
                                   const ConstraintPolicy& policy);

/// Plain-text LP dump: objective line, then one constraint per line.
std::string lp_dump(const LPProblem& p);

/// `scale_factors.csv` body: location,scale_factor_m2,area_ft2,energy_share.
std::string scale_factors_csv(const ScenarioMatrices& m, const LPSolution& sol,
                              const ValidationReport& report);

}  // namespace solargrid

#endif
