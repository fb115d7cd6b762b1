#include "solargrid/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "solargrid/csvfmt.hpp"
#include "solargrid/errors.hpp"
#include "solargrid/pv.hpp"

namespace solargrid {

namespace {

constexpr double kRelTol = 1e-6;  // reporting/validation tolerance

double column_sum(const std::array<double, 24>& col) {
    return std::accumulate(col.begin(), col.end(), 0.0);
}

bool row_satisfied(double lhs, Relation rel, double rhs) {
    const double slack = rel == Relation::ge ? lhs - rhs : rhs - lhs;
    return slack >= -kRelTol * std::max(1.0, std::abs(rhs));
}

}  // namespace

ConstraintPolicy experiment_policy(int experiment) {
    switch (experiment) {
        case 1: return {};
        case 2: return {0.4, std::nullopt};
        case 3: return {std::nullopt, 4.0};
        case 4: return {0.4, 4.0};
        default:
            throw ConfigError("experiment must be 1..4, got " + std::to_string(experiment));
    }
}

LPProblem build_lp(const ScenarioMatrices& m, const ConstraintPolicy& policy,
                   double unit_area) {
    const size_t n = m.n();
    if (n == 0) throw EmptyScenario();

    LPProblem p;
    p.objective.assign(n, unit_area);
    p.var_names.reserve(n);
    for (const auto& loc : m.locations) p.var_names.push_back(loc.name);

    for (int t = 0; t < 24; ++t) {
        ConstraintRow row;
        row.coeffs.resize(n);
        double total_cons = 0.0;
        for (size_t i = 0; i < n; ++i) {
            row.coeffs[i] = m.production[i][t];
            total_cons += m.consumption[i][t];
        }
        row.rel = Relation::ge;
        row.rhs = total_cons;
        row.label = "balance[h" + std::to_string(t + 1) + "]";
        p.rows.push_back(std::move(row));
    }

    auto share_row = [&](size_t i, double fraction, Relation rel, const char* tag) {
        ConstraintRow row;
        row.coeffs.assign(n, 0.0);
        row.coeffs[i] = column_sum(m.production[i]);
        row.rel = rel;
        row.rhs = fraction * column_sum(m.consumption[i]);
        row.label = std::string(tag) + "[" + m.locations[i].name + "]";
        return row;
    };
    if (policy.min_fraction)
        for (size_t i = 0; i < n; ++i)
            p.rows.push_back(share_row(i, *policy.min_fraction, Relation::ge, "min_share"));
    if (policy.max_fraction)
        for (size_t i = 0; i < n; ++i)
            p.rows.push_back(share_row(i, *policy.max_fraction, Relation::le, "max_share"));
    return p;
}

std::optional<std::string> diagnose_structural_infeasibility(
    const ScenarioMatrices& m, const ConstraintPolicy& policy) {
    if (!policy.min_fraction || *policy.min_fraction <= 0.0) return std::nullopt;
    for (size_t i = 0; i < m.n(); ++i) {
        if (column_sum(m.production[i]) <= 0.0 && column_sum(m.consumption[i]) > 0.0)
            return "location \"" + m.locations[i].name +
                   "\" has zero solar production and cannot meet the minimum " +
                   "production share of its consumption";
    }
    return std::nullopt;
}

ValidationReport validate_solution(const ScenarioMatrices& m, const LPSolution& sol,
                                   const ConstraintPolicy& policy) {
    const size_t n = m.n();
    ValidationReport report;
    report.pass = true;

    // Hourly balance, straight from the matrices.
    double min_slack = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 24; ++t) {
        double cons = 0.0, prod = 0.0;
        for (size_t i = 0; i < n; ++i) {
            cons += m.consumption[i][t];
            prod += m.production[i][t] * sol.scale_factors[i];
        }
        const double surplus = prod - cons;
        report.hourly_surplus_mwh[t] = surplus;
        if (surplus < min_slack) {
            min_slack = surplus;
            report.min_slack_hour = t + 1;
            report.min_slack_mwh = surplus;
        }
        if (!row_satisfied(prod, Relation::ge, cons)) {
            report.pass = false;
            report.violations.push_back("balance[h" + std::to_string(t + 1) + "]");
        }
    }

    // Per-location energy shares and the policy rows.
    report.energy_shares.resize(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        const double daily_cons = column_sum(m.consumption[i]);
        const double daily_prod = column_sum(m.production[i]) * sol.scale_factors[i];
        if (daily_cons > 0.0) report.energy_shares[i] = daily_prod / daily_cons;
        if (policy.min_fraction &&
            !row_satisfied(daily_prod, Relation::ge, *policy.min_fraction * daily_cons)) {
            report.pass = false;
            report.violations.push_back("min_share[" + m.locations[i].name + "]");
        }
        if (policy.max_fraction &&
            !row_satisfied(daily_prod, Relation::le, *policy.max_fraction * daily_cons)) {
            report.pass = false;
            report.violations.push_back("max_share[" + m.locations[i].name + "]");
        }
    }
    return report;
}

std::string lp_dump(const LPProblem& p) {
    auto var = [&](size_t j) {
        return p.var_names.size() == p.objective.size() && !p.var_names[j].empty()
                   ? "A[" + p.var_names[j] + "]"
                   : "A" + std::to_string(j + 1);
    };
    std::string out = "minimize";
    for (size_t j = 0; j < p.objective.size(); ++j)
        out += (j == 0 ? " " : " + ") + csv_num(p.objective[j]) + "*" + var(j);
    out += "\nsubject to\n";
    for (const auto& row : p.rows) {
        out += row.label.empty() ? "row" : row.label;
        out += ":";
        bool first = true;
        for (size_t j = 0; j < row.coeffs.size(); ++j) {
            if (row.coeffs[j] == 0.0) continue;
            out += (first ? " " : " + ") + csv_num(row.coeffs[j]) + "*" + var(j);
            first = false;
        }
        if (first) out += " 0";
        out += row.rel == Relation::ge ? " >= " : " <= ";
        out += csv_num(row.rhs);
        out += '\n';
    }
    out += "bounds: A >= 0\n";
    return out;
}

std::string scale_factors_csv(const ScenarioMatrices& m, const LPSolution& sol,
                              const ValidationReport& report) {
    std::string out = "location,scale_factor_m2,area_ft2,energy_share\n";
    for (size_t i = 0; i < m.n(); ++i) {
        const double a = sol.scale_factors[i];
        out += m.locations[i].name;
        out += ',';
        out += csv_num(a);
        out += ',';
        out += csv_num(a * kSqftPerSqm);
        out += ',';
        out += csv_num(report.energy_shares[i]);
        out += '\n';
    }
    return out;
}

}  // namespace solargrid
