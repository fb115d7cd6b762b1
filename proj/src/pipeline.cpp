#include "solargrid/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numeric>
#include <ostream>
#include <sstream>

#include "solargrid/csvfmt.hpp"
#include "solargrid/errors.hpp"

namespace solargrid {

namespace {

struct SimOutput {
    ConsumptionTrace consumption;
    ProductionTrace production;
};

// Simulate one location and express its traces on the common UTC hour axis.
// local-day mode: the location lives its own local calendar day; the 24
// cyclic entries are then rotated so row u holds the local hour active at
// UTC hour u. utc-aligned mode: the 24 UTC hours of the date are simulated
// directly, so the weather window may span two local dates.
SimOutput simulate_location(const ScenarioConfig& cfg, const LocationSpec& loc) {
    const auto path = weather_path(cfg, loc);
    WeatherYear year;
    try {
        std::ifstream in(path);
        if (!in) throw WeatherError("cannot open " + path.string());
        year = parse_tmy3(in);
    } catch (const WeatherError&) {
        throw;
    } catch (const std::exception& e) {
        throw WeatherError("location \"" + loc.name + "\" (" + path.string() +
                           "): " + e.what());
    }

    const int tz = static_cast<int>(std::lround(loc.geometry.tz_offset));
    WeatherDay day;
    try {
        if (cfg.alignment == Alignment::local_day) {
            day = slice_day(year, cfg.simulation_date, loc.name);
        } else {
            const int doy = day_of_year(cfg.simulation_date.month, cfg.simulation_date.day);
            day = slice_hours(year, static_cast<long>(doy - 1) * 24 + tz, loc.name);
        }
    } catch (const std::exception& e) {
        throw WeatherError("location \"" + loc.name + "\": " + e.what());
    }

    const HouseModel& house = cfg.houses.at(loc.house_ref);
    const WaterHeater& wh = cfg.water_heaters.at(loc.water_heater_ref);
    const ZipLoad& zip = cfg.zip_loads.at(loc.zip_ref);
    const ScheduleSet& sched = cfg.schedules.at(loc.schedule_ref);

    SimOutput out;
    out.consumption = simulate_house_day(house, wh, zip, sched, day, loc.geometry);
    out.production = simulate_unit_panel_day(cfg.panel, day, loc.geometry);

    if (cfg.alignment == Alignment::local_day) {
        auto rotate = [&](const std::array<double, 24>& v) {
            std::array<double, 24> r{};
            for (int u = 0; u < 24; ++u) r[u] = v[((u + tz) % 24 + 24) % 24];
            return r;
        };
        out.consumption.kwh = rotate(out.consumption.kwh);
        out.consumption.hvac_kwh = rotate(out.consumption.hvac_kwh);
        out.consumption.water_heater_kwh = rotate(out.consumption.water_heater_kwh);
        out.consumption.zip_kwh = rotate(out.consumption.zip_kwh);
        out.production.kwh_per_m2 = rotate(out.production.kwh_per_m2);
    }
    return out;
}

}  // namespace

PipelineResult simulate_and_optimize(const ScenarioConfig& cfg) {
    PipelineResult result;

    std::vector<std::future<SimOutput>> futures;
    futures.reserve(cfg.locations.size());
    for (const auto& loc : cfg.locations)
        futures.push_back(std::async(std::launch::async,
                                     [&cfg, &loc] { return simulate_location(cfg, loc); }));

    std::vector<std::pair<ConsumptionTrace, ProductionTrace>> traces;
    for (size_t i = 0; i < cfg.locations.size(); ++i) {
        SimOutput out = futures[i].get();  // rethrows in config order
        const auto& loc = cfg.locations[i];
        LocationResult lr;
        lr.consumption = out.consumption;
        lr.production = out.production;
        lr.households = household_count(loc);
        lr.households_derived = !loc.household_count.has_value();
        if (lr.households_derived)
            result.warnings.push_back("location \"" + loc.name +
                                      "\": household count derived as population/3 = " +
                                      std::to_string(lr.households));
        if (lr.households == 0)
            result.warnings.push_back("location \"" + loc.name +
                                      "\": zero households; its consumption column is zero");
        result.locations.push_back(std::move(lr));
        traces.emplace_back(out.consumption, out.production);
    }

    result.matrices = build_matrices(cfg.locations, traces);

    for (const auto& spec : cfg.experiments) {
        ExperimentResult er;
        er.spec = spec;
        er.lp = build_lp(result.matrices, spec.policy, cfg.panel.unit_area);
        if (auto diagnosis = diagnose_structural_infeasibility(result.matrices, spec.policy)) {
            er.solution.status = SolveStatus::infeasible;
            er.solution.detail = *diagnosis;
        } else {
            er.solution = solve_simplex(er.lp);
        }
        if (er.solution.status == SolveStatus::optimal)
            er.validation = validate_solution(result.matrices, er.solution, spec.policy);
        result.experiments.push_back(std::move(er));
    }

    for (size_t i = 0; i < cfg.locations.size(); ++i) {
        StorageReportRow row;
        row.location = cfg.locations[i].name;
        const double daily_cons_mwh =
            std::accumulate(result.matrices.consumption[i].begin(),
                            result.matrices.consumption[i].end(), 0.0);
        row.daily_consumption_gwh = daily_cons_mwh / 1000.0;
        try {
            const StorageEstimate est = estimate_storage(result.matrices.consumption[i],
                                                         result.matrices.production[i]);
            row.required_storage_gwh = est.storage_mwh / 1000.0;
            row.local_area_m2 = est.area_m2;
            result.storage.push_back(row);
        } catch (const ZeroProduction&) {
            result.warnings.push_back("location \"" + cfg.locations[i].name +
                                      "\": no solar production; omitted from the "
                                      "storage report (cannot self-power)");
        }
    }
    return result;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file " + path.string());
    out << content;
}

const ExperimentResult* first_optimal(const PipelineResult& result) {
    for (const auto& er : result.experiments)
        if (er.solution.status == SolveStatus::optimal) return &er;
    return nullptr;
}

double total_area_m2(const ExperimentResult& er) {
    return std::accumulate(er.solution.scale_factors.begin(),
                           er.solution.scale_factors.end(), 0.0);
}

}  // namespace

void write_outputs(const PipelineResult& result, const ScenarioConfig& cfg,
                   const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    std::vector<double> areas(result.matrices.n(), 0.0);
    if (const ExperimentResult* er = first_optimal(result))
        areas = er->solution.scale_factors;
    write_file(out_dir / "hourly_totals.csv",
               hourly_totals_csv(hourly_totals(result.matrices, areas)));

    for (const auto& er : result.experiments) {
        if (er.solution.status != SolveStatus::optimal) continue;
        write_file(out_dir / ("scale_factors_" + er.spec.tag() + ".csv"),
                   scale_factors_csv(result.matrices, er.solution, er.validation));
    }

    write_file(out_dir / "storage_report.csv", storage_report_csv(result.storage));
    write_file(out_dir / "run_report.txt", report_summary(result, cfg));
}

std::string report_summary(const PipelineResult& result, const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "solargrid run report\n";
    out << "====================\n";
    char date[16];
    std::snprintf(date, sizeof(date), "%02d/%02d", cfg.simulation_date.month,
                  cfg.simulation_date.day);
    out << "simulation date: " << date << "  alignment: "
        << (cfg.alignment == Alignment::local_day ? "local-day" : "utc-aligned") << "\n";

    long long total_households = 0;
    for (const auto& lr : result.locations) total_households += lr.households;
    out << "locations: " << result.locations.size()
        << "  total households: " << total_households << "\n\n";

    out << "daily consumption per location (GWh):\n";
    for (size_t i = 0; i < result.matrices.n(); ++i) {
        const double gwh = std::accumulate(result.matrices.consumption[i].begin(),
                                           result.matrices.consumption[i].end(), 0.0) /
                           1000.0;
        out << "  " << result.matrices.locations[i].name << ": " << csv_num(gwh) << "\n";
    }

    out << "\nexperiments:\n";
    if (result.experiments.empty()) out << "  no experiments selected\n";
    for (const auto& er : result.experiments) {
        out << "  " << er.spec.tag() << ": ";
        switch (er.solution.status) {
            case SolveStatus::optimal: {
                const double area = total_area_m2(er);
                out << "optimal, total area " << csv_num(area) << " m^2, iterations "
                    << er.solution.iterations << ", validation "
                    << (er.validation.pass ? "PASS" : "FAIL") << ", min slack "
                    << csv_num(er.validation.min_slack_mwh) << " MWh at hour "
                    << er.validation.min_slack_hour;
                if (total_households > 0)
                    out << ", avg panel area per household "
                        << csv_num(area * kSqftPerSqm / total_households) << " ft^2";
                for (const auto& v : er.validation.violations)
                    out << "\n    violated: " << v;
                break;
            }
            case SolveStatus::infeasible:
                out << "infeasible: " << er.solution.detail;
                break;
            case SolveStatus::unbounded:
                out << "unbounded";
                break;
        }
        out << "\n";
    }

    out << "\nstorage in absence of grid (GWh):\n";
    for (const auto& row : result.storage)
        out << "  " << row.location << ": consumption " << csv_num(row.daily_consumption_gwh)
            << ", storage " << csv_num(row.required_storage_gwh) << "\n";

    out << "\nassumptions:\n";
    out << "  - households = floor(population / 3) where no explicit count is given\n";
    out << "  - nominal voltage everywhere (v_ratio = 1); transmission losses ignored\n";
    out << "  - unitized panel basis 1 m^2; battery round-trip efficiency 1.0\n";
    out << "  - ground albedo " << csv_num(cfg.albedo)
        << "; isotropic sky transposition; NOCT cell temperature model\n";
    out << "  - initial house temperatures = hour-0 heating setpoint\n";

    out << "\nwarnings:\n";
    if (result.warnings.empty()) out << "  none\n";
    for (const auto& w : result.warnings) out << "  - " << w << "\n";
    return out.str();
}

int run_pipeline(const ScenarioConfig& cfg, const std::filesystem::path& out_dir,
                 std::ostream& diag) {
    PipelineResult result;
    try {
        result = simulate_and_optimize(cfg);
        write_outputs(result, cfg, out_dir);
    } catch (const WeatherError& e) {
        diag << "weather error: " << e.what() << "\n";
        return kExitWeatherError;
    } catch (const ConfigError& e) {
        diag << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const NonFiniteState& e) {
        diag << "config error (unstable house parameters): " << e.what() << "\n";
        return kExitConfigError;
    } catch (const IterationLimit& e) {
        diag << "solver failure: " << e.what() << "\n";
        return kExitInfeasible;
    }

    int exit = kExitOk;
    for (const auto& er : result.experiments) {
        if (er.solution.status != SolveStatus::optimal) {
            diag << er.spec.tag() << ": "
                 << (er.solution.status == SolveStatus::infeasible ? "infeasible"
                                                                   : "unbounded");
            if (!er.solution.detail.empty()) diag << " (" << er.solution.detail << ")";
            diag << "\n";
            exit = std::max(exit, static_cast<int>(kExitInfeasible));
        } else if (!er.validation.pass) {
            diag << er.spec.tag() << ": validation failed:";
            for (const auto& v : er.validation.violations) diag << " " << v;
            diag << "\n";
            if (exit == kExitOk) exit = kExitValidationFailure;
        }
    }
    return exit;
}

}  // namespace solargrid
