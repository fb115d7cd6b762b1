#include "solargrid/fixture.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>

#include <nlohmann/json.hpp>

#include "solargrid/errors.hpp"

namespace solargrid {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic noise, stable across platforms.
uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a(const char* s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ULL;
    return h;
}

double noise01(uint64_t seed, uint64_t a, uint64_t b) {
    return static_cast<double>(splitmix64(seed ^ splitmix64(a * 0x9e37ULL + b)) >> 11) /
           9007199254740992.0;  // 2^53
}

double quantize(double v) { return std::round(v * 10.0) / 10.0; }

}  // namespace

const std::vector<FixtureCity>& fixture_cities() {
    static const std::vector<FixtureCity> cities = {
        {"Los Angeles", "los_angeles", 34.05, -118.24, -8.0, 3900000, 0.75},
        {"Brasilia", "brasilia", -15.79, -47.88, -3.0, 3060000, 0.65},
        {"Dakar", "dakar", 14.72, -17.47, 0.0, 1180000, 0.75},
        {"London", "london", 51.51, -0.13, 0.0, 8980000, 0.45},
        {"Nairobi", "nairobi", -1.29, 36.82, 3.0, 4400000, 0.65},
        {"Muscat", "muscat", 23.59, 58.41, 4.0, 1420000, 0.85},
        {"Almaty", "almaty", 43.24, 76.89, 6.0, 1920000, 0.60},
        {"Singapore", "singapore", 1.35, 103.82, 8.0, 5690000, 0.55},
        {"Sydney", "sydney", -33.87, 151.21, 10.0, 5310000, 0.70},
        {"Auckland", "auckland", -36.85, 174.76, 12.0, 1660000, 0.60},
    };
    return cities;
}

WeatherYear synth_weather_year(const FixtureCity& city) {
    const uint64_t seed = fnv1a(city.slug);
    SiteGeometry geo;
    geo.latitude = city.latitude;
    geo.longitude = city.longitude;
    geo.tz_offset = city.tz_offset;

    WeatherYear year;
    year.year = 2009;
    year.station = std::string(city.slug) + "," + city.name + ",synthetic," +
                   std::to_string(city.tz_offset) + "," + std::to_string(city.latitude) +
                   "," + std::to_string(city.longitude) + ",0";
    year.records.reserve(kHoursPerYear);

    const bool north = city.latitude >= 0.0;
    const double t_mean = 27.0 - 0.32 * std::abs(city.latitude);
    const double seasonal_amp = 2.0 + 0.28 * std::abs(city.latitude);
    const int warm_peak_doy = north ? 201 : 19;
    const double diurnal_amp = 4.0 + 3.0 * city.clear_fraction;

    for (int doy = 1; doy <= 365; ++doy) {
        const CalendarDate date = date_from_day_of_year(doy);
        // Per-day cloudiness, biased by the city's climate.
        const double kd = std::clamp(
            city.clear_fraction + 0.55 * (noise01(seed, doy, 0) - 0.5), 0.10, 1.0);
        const double t_day =
            t_mean + seasonal_amp * std::cos(2.0 * kPi * (doy - warm_peak_doy) / 365.0);

        for (int h = 0; h < 24; ++h) {
            WeatherRecord rec;
            rec.timestamp = CivilHour{date.month, date.day, h};

            const SunPosition sun = sun_position(rec.timestamp, geo);
            if (sun.cos_zenith > 0.0) {
                const double cz = sun.cos_zenith;
                const double zenith_deg = std::acos(std::min(1.0, cz)) * 180.0 / kPi;
                // Kasten-Young air mass and a Meinel-style clear-sky beam.
                const double air_mass =
                    1.0 / (cz + 0.50572 * std::pow(96.07995 - zenith_deg, -1.6364));
                const double extraterrestrial =
                    1353.0 * (1.0 + 0.033 * std::cos(2.0 * kPi * doy / 365.0));
                const double dni_clear =
                    extraterrestrial * std::pow(0.7, std::pow(air_mass, 0.678));
                rec.dni = quantize(dni_clear * std::pow(kd, 1.5));
                rec.dhi = quantize(dni_clear * cz * (0.10 + 0.25 * (1.0 - kd)));
                rec.ghi = quantize(rec.dni * cz + rec.dhi);
            }

            double temp = t_day + 0.5 * diurnal_amp * std::cos(2.0 * kPi * (h - 15) / 24.0);
            temp += 1.6 * (noise01(seed, doy, 100 + h) - 0.5);
            rec.dry_bulb = std::clamp(quantize(temp), -60.0, 55.0);
            year.records.push_back(rec);
        }
    }
    return year;
}

namespace {

using json = nlohmann::ordered_json;

json default_schedules() {
    json s;
    s["heating_setpoint_c"] = {17, 17, 17, 17, 17, 17, 20, 20, 20, 20, 20, 20,
                               20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 17, 17};
    s["cooling_setpoint_c"] = {26, 26, 26, 26, 26, 26, 24, 24, 24, 24, 24, 24,
                               24, 24, 24, 24, 24, 24, 24, 24, 24, 24, 26, 26};
    s["hot_water_draw_l"] = {2, 1,  1,  1,  2,  8, 25, 30, 18, 8,  5,  5,
                             6, 5,  4,  4,  6,  10, 16, 20, 18, 12, 8,  5};
    s["zip_multiplier"] = {0.5, 0.4, 0.4, 0.4, 0.4, 0.5, 0.8, 1.0, 0.9, 0.7, 0.6, 0.6,
                           0.7, 0.7, 0.6, 0.7, 0.9, 1.2, 1.5, 1.6, 1.5, 1.2, 0.9, 0.6};
    s["internal_gain_w"] = {150, 150, 150, 150, 150, 200, 350, 350, 250, 200, 200, 200,
                            200, 200, 200, 250, 350, 450, 500, 500, 450, 350, 250, 150};
    return s;
}

}  // namespace

std::filesystem::path write_fixture_scenario(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "weather");

    json cfg;
    cfg["simulation_date"] = "02/01";
    cfg["alignment"] = "local-day";
    cfg["albedo"] = 0.2;
    cfg["panel"] = {{"efficiency", 0.15},
                    {"temp_coeff", -0.004},
                    {"noct", 45.0},
                    {"unit_area", 1.0}};
    cfg["houses"]["default"] = {{"floor_area_ft2", 1735.0},
                                {"envelope_ua_w_per_c", 280.0},
                                {"mass_capacitance_j_per_c", 2.5e7},
                                {"mass_surface_conductance_w_per_c", 2000.0},
                                {"glazing_gain_fraction", 0.5},
                                {"window_area_m2", 16.0},
                                {"hvac_capacity_w", 12000.0},
                                {"hvac_cop_cool", 3.0},
                                {"hvac_cop_heat", 2.2},
                                {"deadband_c", 0.5}};
    cfg["water_heaters"]["default"] = {{"tank_volume_l", 190.0},
                                       {"setpoint_c", 54.0},
                                       {"inlet_temp_c", 16.0},
                                       {"heater_power_w", 4500.0},
                                       {"standby_ua_w_per_c", 2.5}};
    cfg["zip_loads"]["default"] = {{"base_power_w", 1800.0},
                                   {"z_frac", 0.4},
                                   {"i_frac", 0.3},
                                   {"p_frac", 0.3}};
    cfg["schedules"]["default"] = default_schedules();

    cfg["locations"] = json::array();
    for (const FixtureCity& city : fixture_cities()) {
        const std::string weather_rel = std::string("weather/") + city.slug + ".csv";
        {
            std::ofstream out(dir / weather_rel, std::ios::binary);
            if (!out) throw ConfigError("cannot write " + (dir / weather_rel).string());
            write_tmy3(synth_weather_year(city), out);
        }
        json loc;
        loc["name"] = city.name;
        loc["latitude"] = city.latitude;
        loc["longitude"] = city.longitude;
        loc["tz_offset"] = city.tz_offset;
        loc["panel_tilt"] = std::abs(city.latitude);
        loc["panel_azimuth"] = city.latitude >= 0.0 ? 180.0 : 0.0;
        loc["population"] = city.population;
        loc["weather_file"] = weather_rel;
        loc["house"] = "default";
        loc["water_heater"] = "default";
        loc["zip_load"] = "default";
        loc["schedule"] = "default";
        cfg["locations"].push_back(loc);
    }
    cfg["experiments"] = {1, 2, 3, 4};

    const fs::path cfg_path = dir / "scenario.json";
    std::ofstream out(cfg_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + cfg_path.string());
    out << cfg.dump(2) << "\n";
    return cfg_path;
}

}  // namespace solargrid
