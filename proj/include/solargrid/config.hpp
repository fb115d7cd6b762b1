#ifndef SOLARGRID_CONFIG_HPP
#define SOLARGRID_CONFIG_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "solargrid/household.hpp"
#include "solargrid/optimizer.hpp"
#include "solargrid/pv.hpp"
#include "solargrid/scenario.hpp"

namespace solargrid {

enum class Alignment { local_day, utc_aligned };

/// One experiment to run: a canonical number (1..4) or a custom policy
/// (number 0).
struct ExperimentSpec {
    int number = 1;
    ConstraintPolicy policy;
    std::string tag() const { return number > 0 ? "exp" + std::to_string(number) : "custom"; }
};

/// Everything a run needs. One JSON file fully determines a run; see the
/// config reference in the README.
struct ScenarioConfig {
    std::filesystem::path base_dir;  // directory of the config file
    CalendarDate simulation_date{2, 1};
    Alignment alignment = Alignment::local_day;
    double albedo = 0.2;
    PanelSpec panel;
    std::map<std::string, HouseModel> houses;
    std::map<std::string, WaterHeater> water_heaters;
    std::map<std::string, ZipLoad> zip_loads;
    std::map<std::string, ScheduleSet> schedules;
    std::vector<LocationSpec> locations;
    std::vector<ExperimentSpec> experiments;
    std::string output_dir = "out";
};

/// Parse and fully validate a config file. All invariants of the referenced
/// domain types are checked here (positive physical quantities, ZIP fractions
/// summing to 1, setpoint ordering, referenced weather files present, ...).
/// Throws ConfigError with a message naming the offending field.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Resolve a location's weather file against the config directory.
std::filesystem::path weather_path(const ScenarioConfig& cfg, const LocationSpec& loc);

}  // namespace solargrid

#endif
