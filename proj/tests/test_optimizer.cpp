#include "solargrid/optimizer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "solargrid/errors.hpp"

using namespace solargrid;

namespace {

LocationSpec loc(const std::string& name) {
    LocationSpec l;
    l.name = name;
    l.population = 3000;
    return l;
}

// Small synthetic scenario with staggered production peaks.
ScenarioMatrices synthetic_matrices(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> cons(5.0, 50.0);
    std::uniform_real_distribution<double> peak(0.00005, 0.0005);
    ScenarioMatrices m;
    for (size_t i = 0; i < n; ++i) {
        m.locations.push_back(loc("city" + std::to_string(i)));
        std::array<double, 24> c{}, p{};
        const int sunrise = static_cast<int>((i * 24) / n);
        const double amp = peak(rng);
        for (int t = 0; t < 24; ++t) {
            c[t] = cons(rng);
            const int rel = (t - sunrise + 24) % 24;
            if (rel < 10) p[t] = amp * std::sin(rel / 9.0 * 3.14159265);
        }
        m.consumption.push_back(c);
        m.production.push_back(p);
    }
    return m;
}

double solve_objective(const ScenarioMatrices& m, const ConstraintPolicy& policy) {
    const LPSolution sol = solve_simplex(build_lp(m, policy, 1.0));
    EXPECT_EQ(sol.status, SolveStatus::optimal);
    return sol.objective_value;
}

}  // namespace

TEST(BuildLp, RowCountWithBothBounds) {
    const auto m = synthetic_matrices(2, 1);
    const LPProblem p = build_lp(m, ConstraintPolicy{0.4, 4.0}, 1.0);
    EXPECT_EQ(p.rows.size(), 28u);  // 24 balance + 2 min + 2 max
    EXPECT_EQ(p.objective.size(), 2u);
}

TEST(BuildLp, UnconstrainedIsExactlyBalanceRows) {
    const auto m = synthetic_matrices(3, 2);
    const LPProblem p = build_lp(m, ConstraintPolicy{}, 1.0);
    EXPECT_EQ(p.rows.size(), 24u);
    for (const auto& row : p.rows) EXPECT_EQ(row.rel, Relation::ge);
}

TEST(BuildLp, BalanceRowsCarryMatrixData) {
    const auto m = synthetic_matrices(4, 3);
    const LPProblem p = build_lp(m, ConstraintPolicy{}, 1.0);
    for (int t = 0; t < 24; ++t) {
        double cons = 0.0;
        for (size_t i = 0; i < m.n(); ++i) {
            EXPECT_DOUBLE_EQ(p.rows[t].coeffs[i], m.production[i][t]);
            cons += m.consumption[i][t];
        }
        EXPECT_DOUBLE_EQ(p.rows[t].rhs, cons);
    }
}

TEST(BuildLp, EmptyScenarioThrows) {
    ScenarioMatrices m;
    EXPECT_THROW(build_lp(m, ConstraintPolicy{}, 1.0), EmptyScenario);
}

TEST(BuildLp, ObjectiveUsesUnitArea) {
    const auto m = synthetic_matrices(3, 4);
    const LPProblem p = build_lp(m, ConstraintPolicy{}, 2.5);
    for (double c : p.objective) EXPECT_DOUBLE_EQ(c, 2.5);
}

TEST(ExperimentPolicy, CanonicalMapping) {
    EXPECT_FALSE(experiment_policy(1).min_fraction.has_value());
    EXPECT_FALSE(experiment_policy(1).max_fraction.has_value());
    EXPECT_DOUBLE_EQ(*experiment_policy(2).min_fraction, 0.4);
    EXPECT_FALSE(experiment_policy(2).max_fraction.has_value());
    EXPECT_DOUBLE_EQ(*experiment_policy(3).max_fraction, 4.0);
    EXPECT_DOUBLE_EQ(*experiment_policy(4).min_fraction, 0.4);
    EXPECT_DOUBLE_EQ(*experiment_policy(4).max_fraction, 4.0);
    EXPECT_THROW(experiment_policy(5), ConfigError);
}

TEST(StructuralInfeasibility, NamesTheDarkLocation) {
    auto m = synthetic_matrices(2, 5);
    m.locations[1].name = "Nowhere";
    m.production[1].fill(0.0);
    const auto diagnosis = diagnose_structural_infeasibility(m, ConstraintPolicy{0.4, {}});
    ASSERT_TRUE(diagnosis.has_value());
    EXPECT_NE(diagnosis->find("Nowhere"), std::string::npos);
    EXPECT_FALSE(
        diagnose_structural_infeasibility(m, ConstraintPolicy{}).has_value());
}

TEST(ValidateSolution, PassesOnOptimalAndFailsOnPerturbation) {
    const auto m = synthetic_matrices(3, 6);
    const ConstraintPolicy policy{0.4, 4.0};
    LPSolution sol = solve_simplex(build_lp(m, policy, 1.0));
    ASSERT_EQ(sol.status, SolveStatus::optimal);

    const ValidationReport ok = validate_solution(m, sol, policy);
    EXPECT_TRUE(ok.pass);
    EXPECT_TRUE(ok.violations.empty());
    for (double share : ok.energy_shares) {
        EXPECT_GE(share, 0.4 - 1e-6);
        EXPECT_LE(share, 4.0 + 1e-6);
    }

    // Knock 10% off one factor: some recomputed row must break, and the
    // report must say which.
    sol.scale_factors[0] *= 0.9;
    const ValidationReport bad = validate_solution(m, sol, policy);
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.violations.empty());
}

TEST(ValidateSolution, AllZeroConsumptionPassesWithZeroAreas) {
    auto m = synthetic_matrices(2, 7);
    for (auto& col : m.consumption) col.fill(0.0);
    LPSolution sol;
    sol.status = SolveStatus::optimal;
    sol.scale_factors = {0.0, 0.0};
    const ValidationReport report = validate_solution(m, sol, ConstraintPolicy{});
    EXPECT_TRUE(report.pass);
    for (double share : report.energy_shares) EXPECT_EQ(share, 0.0);
}

TEST(ValidateSolution, MinSlackHourIdentified) {
    ScenarioMatrices m;
    m.locations = {loc("only")};
    m.consumption.resize(1);
    m.production.resize(1);
    for (int t = 0; t < 24; ++t) {
        m.consumption[0][t] = 10.0;
        m.production[0][t] = 0.012 + 0.001 * t;  // tightest at t=0 with area 1000
    }
    LPSolution sol;
    sol.status = SolveStatus::optimal;
    sol.scale_factors = {1000.0};
    const ValidationReport report = validate_solution(m, sol, ConstraintPolicy{});
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.min_slack_hour, 1);
    EXPECT_NEAR(report.min_slack_mwh, 2.0, 1e-9);
}

// Adding constraints can only grow the minimum area: exp1 <= exp2 <= exp4 and
// exp1 <= exp3 <= exp4, the ordering the paper's scale-factor sums exhibit.
TEST(Optimizer, ConstraintMonotonicityOnSyntheticScenarios) {
    for (unsigned seed : {11u, 12u, 13u}) {
        const auto m = synthetic_matrices(5, seed);
        const double obj1 = solve_objective(m, experiment_policy(1));
        const double obj2 = solve_objective(m, experiment_policy(2));
        const double obj3 = solve_objective(m, experiment_policy(3));
        const double obj4 = solve_objective(m, experiment_policy(4));
        const double tol = 1e-9 * obj4;
        EXPECT_LE(obj1, obj2 + tol) << "seed " << seed;
        EXPECT_LE(obj2, obj4 + tol) << "seed " << seed;
        EXPECT_LE(obj1, obj3 + tol) << "seed " << seed;
        EXPECT_LE(obj3, obj4 + tol) << "seed " << seed;
    }
}

// unit_area scales the objective uniformly, so the argmin is unchanged.
TEST(Optimizer, UnitAreaScaleInvariance) {
    const auto m = synthetic_matrices(4, 21);
    const LPSolution base = solve_simplex(build_lp(m, ConstraintPolicy{}, 1.0));
    const LPSolution scaled = solve_simplex(build_lp(m, ConstraintPolicy{}, 3.0));
    ASSERT_EQ(base.status, SolveStatus::optimal);
    ASSERT_EQ(scaled.status, SolveStatus::optimal);
    EXPECT_NEAR(scaled.objective_value, 3.0 * base.objective_value,
                1e-6 * std::abs(scaled.objective_value));
    for (size_t i = 0; i < m.n(); ++i)
        EXPECT_NEAR(scaled.scale_factors[i], base.scale_factors[i],
                    1e-6 * std::max(1.0, base.scale_factors[i]));
}

TEST(LpDump, ListsObjectiveRowsAndBounds) {
    const auto m = synthetic_matrices(2, 31);
    const LPProblem p = build_lp(m, ConstraintPolicy{0.4, {}}, 1.0);
    const std::string dump = lp_dump(p);
    EXPECT_EQ(dump.rfind("minimize", 0), 0u);
    EXPECT_NE(dump.find("balance[h1]:"), std::string::npos);
    EXPECT_NE(dump.find("min_share[city0]:"), std::string::npos);
    EXPECT_NE(dump.find(">="), std::string::npos);
    EXPECT_NE(dump.find("bounds: A >= 0"), std::string::npos);
}

TEST(ScaleFactorsCsv, HeaderAndFt2Conversion) {
    const auto m = synthetic_matrices(1, 41);
    LPSolution sol;
    sol.status = SolveStatus::optimal;
    sol.scale_factors = {100.0};
    ValidationReport report;
    report.energy_shares = {1.5};
    const std::string csv = scale_factors_csv(m, sol, report);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "location,scale_factor_m2,area_ft2,energy_share");
    EXPECT_NE(csv.find("city0,100,1076.39,1.5\n"), std::string::npos);
}
