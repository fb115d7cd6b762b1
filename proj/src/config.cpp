#include "solargrid/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "solargrid/errors.hpp"

namespace solargrid {

namespace {

using json = nlohmann::json;

double num(const json& j, const std::string& ctx, const char* key) {
    if (!j.contains(key)) throw ConfigError(ctx + ": missing \"" + key + "\"");
    if (!j[key].is_number()) throw ConfigError(ctx + ": \"" + key + "\" must be a number");
    return j[key].get<double>();
}

double num_or(const json& j, const char* key, double fallback) {
    return j.contains(key) ? j[key].get<double>() : fallback;
}

void require_positive(const std::string& ctx, const char* key, double v) {
    if (!(v > 0.0)) throw ConfigError(ctx + ": \"" + key + "\" must be > 0");
}

std::array<double, 24> hours_array(const json& j, const std::string& ctx, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 24)
        throw ConfigError(ctx + ": \"" + key + "\" must be an array of 24 numbers");
    std::array<double, 24> out{};
    for (int h = 0; h < 24; ++h) out[h] = j[key][h].get<double>();
    return out;
}

HouseModel parse_house(const json& j, const std::string& ctx) {
    HouseModel h;
    h.floor_area = num(j, ctx, "floor_area_ft2");
    h.envelope_ua = num(j, ctx, "envelope_ua_w_per_c");
    h.mass_capacitance = num(j, ctx, "mass_capacitance_j_per_c");
    h.mass_surface_conductance = num(j, ctx, "mass_surface_conductance_w_per_c");
    h.glazing_gain_fraction = num(j, ctx, "glazing_gain_fraction");
    h.window_area = num(j, ctx, "window_area_m2");
    h.hvac_capacity = num(j, ctx, "hvac_capacity_w");
    h.hvac_cop_cool = num(j, ctx, "hvac_cop_cool");
    h.hvac_cop_heat = num(j, ctx, "hvac_cop_heat");
    h.deadband = num(j, ctx, "deadband_c");
    require_positive(ctx, "floor_area_ft2", h.floor_area);
    require_positive(ctx, "envelope_ua_w_per_c", h.envelope_ua);
    require_positive(ctx, "mass_capacitance_j_per_c", h.mass_capacitance);
    require_positive(ctx, "mass_surface_conductance_w_per_c", h.mass_surface_conductance);
    require_positive(ctx, "window_area_m2", h.window_area);
    require_positive(ctx, "hvac_capacity_w", h.hvac_capacity);
    require_positive(ctx, "hvac_cop_cool", h.hvac_cop_cool);
    require_positive(ctx, "hvac_cop_heat", h.hvac_cop_heat);
    require_positive(ctx, "deadband_c", h.deadband);
    if (h.glazing_gain_fraction < 0.0 || h.glazing_gain_fraction > 1.0)
        throw ConfigError(ctx + ": \"glazing_gain_fraction\" must be in [0, 1]");
    return h;
}

WaterHeater parse_water_heater(const json& j, const std::string& ctx) {
    WaterHeater w;
    w.tank_volume = num(j, ctx, "tank_volume_l");
    w.setpoint = num(j, ctx, "setpoint_c");
    w.inlet_temp = num(j, ctx, "inlet_temp_c");
    w.heater_power = num(j, ctx, "heater_power_w");
    w.standby_ua = num(j, ctx, "standby_ua_w_per_c");
    require_positive(ctx, "tank_volume_l", w.tank_volume);
    require_positive(ctx, "heater_power_w", w.heater_power);
    if (!(w.setpoint > w.inlet_temp))
        throw ConfigError(ctx + ": \"setpoint_c\" must exceed \"inlet_temp_c\"");
    if (w.standby_ua < 0.0) throw ConfigError(ctx + ": \"standby_ua_w_per_c\" must be >= 0");
    return w;
}

ZipLoad parse_zip(const json& j, const std::string& ctx) {
    ZipLoad z;
    z.base_power = num(j, ctx, "base_power_w");
    z.z_frac = num(j, ctx, "z_frac");
    z.i_frac = num(j, ctx, "i_frac");
    z.p_frac = num(j, ctx, "p_frac");
    if (z.base_power < 0.0) throw ConfigError(ctx + ": \"base_power_w\" must be >= 0");
    if (std::abs(z.z_frac + z.i_frac + z.p_frac - 1.0) > 1e-9)
        throw ConfigError(ctx + ": ZIP fractions must sum to 1");
    return z;
}

ScheduleSet parse_schedule(const json& j, const std::string& ctx) {
    ScheduleSet s;
    s.heating_setpoint = hours_array(j, ctx, "heating_setpoint_c");
    s.cooling_setpoint = hours_array(j, ctx, "cooling_setpoint_c");
    s.hot_water_draw = hours_array(j, ctx, "hot_water_draw_l");
    s.zip_multiplier = hours_array(j, ctx, "zip_multiplier");
    s.internal_gain = hours_array(j, ctx, "internal_gain_w");
    for (int h = 0; h < 24; ++h) {
        if (s.hot_water_draw[h] < 0.0 || s.zip_multiplier[h] < 0.0 || s.internal_gain[h] < 0.0)
            throw ConfigError(ctx + ": schedule values must be >= 0 (hour " +
                              std::to_string(h) + ")");
    }
    return s;
}

CalendarDate parse_date(const std::string& text) {
    int month = 0, day = 0, year = 0;
    const int n = std::sscanf(text.c_str(), "%d/%d/%d", &month, &day, &year);
    if (n < 2 || !valid_date(month, day))
        throw ConfigError("invalid \"simulation_date\" \"" + text +
                          "\" (expected MM/DD or MM/DD/YYYY)");
    return CalendarDate{month, day};
}

template <typename T>
const T& resolve(const std::map<std::string, T>& table, const std::string& name,
                 const std::string& ctx, const char* kind) {
    auto it = table.find(name);
    if (it == table.end())
        throw ConfigError(ctx + ": unknown " + kind + " \"" + name + "\"");
    return it->second;
}

}  // namespace

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }

    ScenarioConfig cfg;
    cfg.base_dir = path.has_parent_path() ? path.parent_path() : ".";

    if (j.contains("simulation_date"))
        cfg.simulation_date = parse_date(j["simulation_date"].get<std::string>());
    if (j.contains("alignment")) {
        const std::string a = j["alignment"].get<std::string>();
        if (a == "local-day")
            cfg.alignment = Alignment::local_day;
        else if (a == "utc-aligned")
            cfg.alignment = Alignment::utc_aligned;
        else
            throw ConfigError("\"alignment\" must be \"local-day\" or \"utc-aligned\"");
    }
    cfg.albedo = num_or(j, "albedo", 0.2);
    if (cfg.albedo < 0.0 || cfg.albedo > 1.0)
        throw ConfigError("\"albedo\" must be in [0, 1]");

    if (j.contains("panel")) {
        const json& p = j["panel"];
        cfg.panel.efficiency = num_or(p, "efficiency", cfg.panel.efficiency);
        cfg.panel.temp_coeff = num_or(p, "temp_coeff", cfg.panel.temp_coeff);
        cfg.panel.noct = num_or(p, "noct", cfg.panel.noct);
        cfg.panel.unit_area = num_or(p, "unit_area", cfg.panel.unit_area);
    }
    if (!(cfg.panel.efficiency > 0.0 && cfg.panel.efficiency < 1.0))
        throw ConfigError("panel: \"efficiency\" must be in (0, 1)");
    if (!(cfg.panel.unit_area > 0.0)) throw ConfigError("panel: \"unit_area\" must be > 0");
    if (cfg.panel.noct < 30.0 || cfg.panel.noct > 60.0)
        throw ConfigError("panel: \"noct\" must be in [30, 60]");

    if (j.contains("houses"))
        for (const auto& [name, body] : j["houses"].items())
            cfg.houses.emplace(name, parse_house(body, "houses." + name));
    if (j.contains("water_heaters"))
        for (const auto& [name, body] : j["water_heaters"].items())
            cfg.water_heaters.emplace(name, parse_water_heater(body, "water_heaters." + name));
    if (j.contains("zip_loads"))
        for (const auto& [name, body] : j["zip_loads"].items())
            cfg.zip_loads.emplace(name, parse_zip(body, "zip_loads." + name));
    if (j.contains("schedules"))
        for (const auto& [name, body] : j["schedules"].items())
            cfg.schedules.emplace(name, parse_schedule(body, "schedules." + name));

    if (!j.contains("locations") || !j["locations"].is_array() || j["locations"].empty())
        throw ConfigError("config must list at least one location");
    for (const json& lj : j["locations"]) {
        LocationSpec loc;
        loc.name = lj.value("name", "");
        const std::string ctx = "location \"" + loc.name + "\"";
        if (loc.name.empty()) throw ConfigError("every location needs a \"name\"");
        if (loc.name.find(',') != std::string::npos ||
            loc.name.find('\n') != std::string::npos)
            throw ConfigError(ctx + ": name must not contain commas or newlines");
        loc.geometry.latitude = num(lj, ctx, "latitude");
        loc.geometry.longitude = num(lj, ctx, "longitude");
        loc.geometry.tz_offset = num(lj, ctx, "tz_offset");
        loc.geometry.panel_tilt = num(lj, ctx, "panel_tilt");
        loc.geometry.panel_azimuth = num_or(lj, "panel_azimuth", 180.0);
        loc.geometry.albedo = cfg.albedo;
        if (std::abs(loc.geometry.latitude) > 90.0)
            throw ConfigError(ctx + ": \"latitude\" must be in [-90, 90]");
        if (std::abs(loc.geometry.longitude) > 180.0)
            throw ConfigError(ctx + ": \"longitude\" must be in [-180, 180]");
        if (loc.geometry.panel_tilt < 0.0 || loc.geometry.panel_tilt > 90.0)
            throw ConfigError(ctx + ": \"panel_tilt\" must be in [0, 90]");
        if (std::abs(loc.geometry.tz_offset) > 14.0)
            throw ConfigError(ctx + ": \"tz_offset\" must be in [-14, 14]");
        loc.population = lj.value("population", 0LL);
        if (loc.population <= 0) throw ConfigError(ctx + ": \"population\" must be > 0");
        if (lj.contains("household_count")) {
            loc.household_count = lj["household_count"].get<long long>();
            if (*loc.household_count <= 0)
                throw ConfigError(ctx + ": \"household_count\" must be > 0 when present");
        }
        loc.weather_file = lj.value("weather_file", "");
        if (loc.weather_file.empty()) throw ConfigError(ctx + ": missing \"weather_file\"");
        loc.house_ref = lj.value("house", "default");
        loc.water_heater_ref = lj.value("water_heater", "default");
        loc.zip_ref = lj.value("zip_load", "default");
        loc.schedule_ref = lj.value("schedule", "default");

        const auto& house = resolve(cfg.houses, loc.house_ref, ctx, "house");
        resolve(cfg.water_heaters, loc.water_heater_ref, ctx, "water heater");
        resolve(cfg.zip_loads, loc.zip_ref, ctx, "zip load");
        const auto& sched = resolve(cfg.schedules, loc.schedule_ref, ctx, "schedule");
        for (int h = 0; h < 24; ++h) {
            if (sched.cooling_setpoint[h] < sched.heating_setpoint[h] + house.deadband)
                throw ConfigError(ctx + ": schedule \"" + loc.schedule_ref +
                                  "\" violates cooling >= heating + deadband at hour " +
                                  std::to_string(h));
        }
        cfg.locations.push_back(std::move(loc));
    }

    if (j.contains("experiments")) {
        for (const json& e : j["experiments"]) {
            ExperimentSpec spec;
            if (e.is_number_integer()) {
                spec.number = e.get<int>();
                spec.policy = experiment_policy(spec.number);  // validates 1..4
            } else if (e.is_object()) {
                spec.number = 0;
                if (e.contains("min_fraction"))
                    spec.policy.min_fraction = e["min_fraction"].get<double>();
                if (e.contains("max_fraction"))
                    spec.policy.max_fraction = e["max_fraction"].get<double>();
                if (spec.policy.min_fraction && *spec.policy.min_fraction < 0.0)
                    throw ConfigError("custom experiment: \"min_fraction\" must be >= 0");
                if (spec.policy.min_fraction && spec.policy.max_fraction &&
                    !(*spec.policy.max_fraction > *spec.policy.min_fraction))
                    throw ConfigError(
                        "custom experiment: \"max_fraction\" must exceed \"min_fraction\"");
            } else {
                throw ConfigError("\"experiments\" entries must be 1..4 or policy objects");
            }
            cfg.experiments.push_back(spec);
        }
    }
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();

    // Referenced weather files must exist; report the resolved path.
    for (const auto& loc : cfg.locations) {
        const auto p = weather_path(cfg, loc);
        if (!std::filesystem::exists(p))
            throw ConfigError("location \"" + loc.name + "\": weather file not found: " +
                              p.string());
    }
    return cfg;
}

std::filesystem::path weather_path(const ScenarioConfig& cfg, const LocationSpec& loc) {
    std::filesystem::path p(loc.weather_file);
    return p.is_absolute() ? p : cfg.base_dir / p;
}

}  // namespace solargrid
