#ifndef SOLARGRID_FIXTURE_HPP
#define SOLARGRID_FIXTURE_HPP

#include <filesystem>
#include <vector>

#include "solargrid/weather.hpp"

namespace solargrid {

/// One city of the bundled ten-location demonstration scenario. The list
/// spans the globe at roughly two-time-zone spacing so that some location is
/// always in daylight.
struct FixtureCity {
    const char* name;
    const char* slug;       // file-name-safe identifier
    double latitude;        // deg, +N
    double longitude;       // deg, +E
    double tz_offset;       // hours from UTC
    long long population;   // approximate city population
    double clear_fraction;  // mean clear-sky fraction of the local climate
};

const std::vector<FixtureCity>& fixture_cities();

/// Deterministic synthetic weather year for a city: clear-sky irradiance
/// shaped by a hashed per-day cloud factor, plus a latitude-driven seasonal
/// and diurnal temperature model. Values are quantized to 0.1 so files
/// round-trip exactly. Same city always yields the same year.
WeatherYear synth_weather_year(const FixtureCity& city);

/// Write the bundled scenario under `dir`: weather/<slug>.csv per city plus
/// scenario.json wired to them. Returns the config path.
std::filesystem::path write_fixture_scenario(const std::filesystem::path& dir);

}  // namespace solargrid

#endif
