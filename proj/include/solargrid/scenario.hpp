#ifndef SOLARGRID_SCENARIO_HPP
#define SOLARGRID_SCENARIO_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solargrid/household.hpp"
#include "solargrid/pv.hpp"
#include "solargrid/weather.hpp"

namespace solargrid {

/// One grid participant region.
struct LocationSpec {
    std::string name;
    SiteGeometry geometry;
    long long population = 0;
    std::optional<long long> household_count;  // overrides the population rule
    std::string weather_file;
    // named fixture references resolved by the config loader
    std::string house_ref = "default";
    std::string water_heater_ref = "default";
    std::string zip_ref = "default";
    std::string schedule_ref = "default";
};

/// Houses at a location: the explicit count when given, else one-third of the
/// population (floored).
long long household_count(const LocationSpec& loc);

/// The 24 x n consumption and production matrices. Consumption is city-scaled
/// (MWh per hour per location); production is unitized (MWh per hour per m^2
/// of panel). Stored column-major: column i is location i's 24-hour profile,
/// in the same order as `locations`.
struct ScenarioMatrices {
    std::vector<LocationSpec> locations;
    std::vector<std::array<double, 24>> consumption;  // [i][t], MWh
    std::vector<std::array<double, 24>> production;   // [i][t], MWh per m^2
    size_t n() const { return locations.size(); }
};

/// Scale per-house traces by household counts and assemble the matrices.
/// Throws TraceLengthMismatch when the trace list does not match the
/// location list.
ScenarioMatrices build_matrices(
    const std::vector<LocationSpec>& locations,
    const std::vector<std::pair<ConsumptionTrace, ProductionTrace>>& traces);

struct HourlyTotal {
    double consumption_mwh;
    double production_mwh;
    double surplus_mwh;  // production - consumption
};

/// Grid-wide totals per hour for a given per-location panel area (m^2).
std::array<HourlyTotal, 24> hourly_totals(const ScenarioMatrices& m,
                                          std::span<const double> areas_m2);

/// `hourly_totals.csv` body: header plus one row per hour (1..24), numbers at
/// 6 significant digits, \n line endings.
std::string hourly_totals_csv(const std::array<HourlyTotal, 24>& totals);

}  // namespace solargrid

#endif
