#include "solargrid/scenario.hpp"

#include <string>

#include "solargrid/csvfmt.hpp"
#include "solargrid/errors.hpp"

namespace solargrid {

long long household_count(const LocationSpec& loc) {
    if (loc.household_count) return *loc.household_count;
    return loc.population / 3;
}

ScenarioMatrices build_matrices(
    const std::vector<LocationSpec>& locations,
    const std::vector<std::pair<ConsumptionTrace, ProductionTrace>>& traces) {
    if (traces.size() != locations.size())
        throw TraceLengthMismatch("have " + std::to_string(traces.size()) +
                                  " trace pairs for " + std::to_string(locations.size()) +
                                  " locations");
    ScenarioMatrices m;
    m.locations = locations;
    m.consumption.resize(locations.size());
    m.production.resize(locations.size());
    for (size_t i = 0; i < locations.size(); ++i) {
        const double houses = static_cast<double>(household_count(locations[i]));
        for (int t = 0; t < 24; ++t) {
            m.consumption[i][t] = traces[i].first.kwh[t] * houses / 1000.0;  // MWh
            m.production[i][t] = traces[i].second.kwh_per_m2[t] / 1000.0;    // MWh/m^2
        }
    }
    return m;
}

std::array<HourlyTotal, 24> hourly_totals(const ScenarioMatrices& m,
                                          std::span<const double> areas_m2) {
    if (areas_m2.size() != m.n())
        throw TraceLengthMismatch("areas length " + std::to_string(areas_m2.size()) +
                                  " does not match location count " +
                                  std::to_string(m.n()));
    std::array<HourlyTotal, 24> totals{};
    for (int t = 0; t < 24; ++t) {
        double cons = 0.0, prod = 0.0;
        for (size_t i = 0; i < m.n(); ++i) {
            cons += m.consumption[i][t];
            prod += m.production[i][t] * areas_m2[i];
        }
        totals[t] = HourlyTotal{cons, prod, prod - cons};
    }
    return totals;
}

std::string hourly_totals_csv(const std::array<HourlyTotal, 24>& totals) {
    std::string out = "hour,consumption_mwh,production_mwh,surplus_mwh\n";
    for (int t = 0; t < 24; ++t) {
        out += std::to_string(t + 1);
        out += ',';
        out += csv_num(totals[t].consumption_mwh);
        out += ',';
        out += csv_num(totals[t].production_mwh);
        out += ',';
        out += csv_num(totals[t].surplus_mwh);
        out += '\n';
    }
    return out;
}

}  // namespace solargrid
