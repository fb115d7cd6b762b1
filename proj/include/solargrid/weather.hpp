#ifndef SOLARGRID_WEATHER_HPP
#define SOLARGRID_WEATHER_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace solargrid {

constexpr int kHoursPerYear = 8760;
constexpr double kMaxIrradiance = 1500.0;  // W/m^2, physical plausibility bound

/// Local standard time at hour resolution, hour-beginning convention
/// (hour 0 covers 00:00-01:00). Non-leap calendar, year kept separately.
struct CivilHour {
    int month = 1;  // 1-12
    int day = 1;    // 1-31
    int hour = 0;   // 0-23
    bool operator==(const CivilHour&) const = default;
};

struct CalendarDate {
    int month = 1;
    int day = 1;
    bool operator==(const CalendarDate&) const = default;
};

bool valid_date(int month, int day);
/// 1..365 on the non-leap calendar used throughout. Throws DateNotFound.
int day_of_year(int month, int day);
CalendarDate date_from_day_of_year(int doy);

struct WeatherRecord {
    CivilHour timestamp;
    double ghi = 0.0;       // global horizontal irradiance, W/m^2
    double dni = 0.0;       // direct normal irradiance, W/m^2
    double dhi = 0.0;       // diffuse horizontal irradiance, W/m^2
    double dry_bulb = 0.0;  // ambient temperature, degC
    bool operator==(const WeatherRecord&) const = default;
};

/// One typical meteorological year: 8760 chronological hourly records.
struct WeatherYear {
    std::string station;  // raw first header line of the source file
    int year = 0;         // year of the first data row (TMY years may vary per month)
    std::vector<WeatherRecord> records;
};

/// Exactly 24 consecutive hours of one calendar day.
struct WeatherDay {
    std::array<WeatherRecord, 24> records{};
    std::string location_id;
};

struct SiteGeometry {
    double latitude = 0.0;        // degrees, +N
    double longitude = 0.0;       // degrees, +E
    double tz_offset = 0.0;       // hours from UTC, signed
    double panel_tilt = 0.0;      // degrees from horizontal
    double panel_azimuth = 180.0; // degrees clockwise from north; 180 faces south
    double albedo = 0.2;          // ground reflectance for the POA ground term
};

/// Parse a TMY3-style CSV: station header line, column-name line, 8760 data
/// rows. Required columns (located by exact name, extra columns ignored):
///   "Date (MM/DD/YYYY)", "Time (HH:MM)", "GHI (W/m^2)", "DNI (W/m^2)",
///   "DHI (W/m^2)", "Dry-bulb (C)"
/// Times 01:00..24:00 are treated as hour-ending (the TMY3 convention) and
/// normalized to hour-beginning 00..23; files already using 00:00..23:00 are
/// taken as-is. Rows must advance hour-by-hour through a 365-day calendar.
/// Throws MalformedHeader, RowCountMismatch, ValueOutOfRange.
WeatherYear parse_tmy3(std::istream& in);

/// Inverse of parse_tmy3 for the required columns, hour-ending times.
/// Numeric fields are written with shortest round-trip formatting, so
/// parse(write(year)) reproduces the records exactly.
void write_tmy3(const WeatherYear& year, std::ostream& out);

/// The 24 records of one calendar day. Throws DateNotFound.
WeatherDay slice_day(const WeatherYear& year, CalendarDate date,
                     std::string location_id = "");

/// 24 records starting at an arbitrary hour offset from the year start,
/// wrapping cyclically. Used for the utc-aligned scenario mode.
WeatherDay slice_hours(const WeatherYear& year, long start_hour,
                       std::string location_id = "");

struct SunPosition {
    double cos_zenith = 0.0;   // <= 0 when the sun is below the horizon
    double azimuth_deg = 0.0;  // clockwise from north
};

/// NOAA-style declination + hour-angle approximation, evaluated at the hour
/// instant in local standard time. Accuracy about +-0.5 degrees.
SunPosition sun_position(const CivilHour& t, const SiteGeometry& geo);

/// Cosine of the beam incidence angle on a plane with the given tilt and
/// azimuth. Not clamped; may be negative when the sun is behind the plane.
double cos_incidence(const SunPosition& sun, double tilt_deg, double azimuth_deg);

/// Isotropic-sky (Liu-Jordan) transposition:
///   poa = dni*max(0, cos theta_i) + dhi*(1+cos tilt)/2 + ghi*albedo*(1-cos tilt)/2
/// The beam term is zero whenever the sun is below the horizon.
double plane_of_array(const WeatherRecord& rec, const SiteGeometry& geo);

}  // namespace solargrid

#endif
