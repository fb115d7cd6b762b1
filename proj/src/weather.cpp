#include "solargrid/weather.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "solargrid/errors.hpp"

namespace solargrid {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kDaysInMonth[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

double rad(double deg) { return deg * kPi / 180.0; }

}  // namespace

bool valid_date(int month, int day) {
    return month >= 1 && month <= 12 && day >= 1 && day <= kDaysInMonth[month - 1];
}

int day_of_year(int month, int day) {
    if (!valid_date(month, day))
        throw DateNotFound("invalid calendar date " + std::to_string(month) + "/" +
                           std::to_string(day));
    int doy = day;
    for (int m = 1; m < month; ++m) doy += kDaysInMonth[m - 1];
    return doy;
}

CalendarDate date_from_day_of_year(int doy) {
    if (doy < 1 || doy > 365)
        throw DateNotFound("day of year " + std::to_string(doy) + " out of range");
    int m = 1;
    while (doy > kDaysInMonth[m - 1]) {
        doy -= kDaysInMonth[m - 1];
        ++m;
    }
    return CalendarDate{m, doy};
}

// --- TMY3 parsing ------------------------------------------------------------

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

const char* const kDateCol = "Date (MM/DD/YYYY)";
const char* const kTimeCol = "Time (HH:MM)";
const char* const kGhiCol = "GHI (W/m^2)";
const char* const kDniCol = "DNI (W/m^2)";
const char* const kDhiCol = "DHI (W/m^2)";
const char* const kDryBulbCol = "Dry-bulb (C)";

struct ColumnMap {
    size_t date, time, ghi, dni, dhi, dry_bulb;
};

ColumnMap map_columns(const std::vector<std::string>& names) {
    auto find = [&](const char* name) -> size_t {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw MalformedHeader(std::string("required column \"") + name +
                                  "\" not found");
        return static_cast<size_t>(it - names.begin());
    };
    return ColumnMap{find(kDateCol), find(kTimeCol), find(kGhiCol),
                     find(kDniCol), find(kDhiCol), find(kDryBulbCol)};
}

double parse_number(const std::string& s, long row, const char* what) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    while (begin != end && *begin == ' ') ++begin;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
        throw ValueOutOfRange(row, std::string("cannot parse ") + what + " \"" + s + "\"");
    return v;
}

void check_record_bounds(const WeatherRecord& r, long row) {
    auto irr = [&](double v, const char* name) {
        if (!(v >= 0.0 && v <= kMaxIrradiance))
            throw ValueOutOfRange(row, std::string(name) + " = " + std::to_string(v) +
                                           " outside [0, 1500] W/m^2");
    };
    irr(r.ghi, "GHI");
    irr(r.dni, "DNI");
    irr(r.dhi, "DHI");
    if (!(r.dry_bulb >= -90.0 && r.dry_bulb <= 60.0))
        throw ValueOutOfRange(row, "dry-bulb = " + std::to_string(r.dry_bulb) +
                                       " outside [-90, 60] C");
}

}  // namespace

WeatherYear parse_tmy3(std::istream& in) {
    WeatherYear year;
    std::string line;
    if (!std::getline(in, line)) throw MalformedHeader("empty file");
    while (!line.empty() && line.back() == '\r') line.pop_back();
    year.station = line;

    if (!std::getline(in, line)) throw MalformedHeader("missing column-name line");
    const ColumnMap cols = map_columns(split_csv(line));

    long row = 0;
    int hour_offset = 0;  // -1 once a 01:00..24:00 hour-ending file is detected
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        ++row;
        if (row > kHoursPerYear) throw RowCountMismatch(kHoursPerYear, row);
        const auto fields = split_csv(line);
        const size_t needed =
            std::max({cols.date, cols.time, cols.ghi, cols.dni, cols.dhi, cols.dry_bulb});
        if (fields.size() <= needed)
            throw ValueOutOfRange(row, "row has " + std::to_string(fields.size()) +
                                           " fields, need at least " +
                                           std::to_string(needed + 1));

        int month = 0, day = 0, yy = 0, hh = 0, mm = 0;
        if (std::sscanf(fields[cols.date].c_str(), "%d/%d/%d", &month, &day, &yy) != 3)
            throw ValueOutOfRange(row, "cannot parse date \"" + fields[cols.date] + "\"");
        if (std::sscanf(fields[cols.time].c_str(), "%d:%d", &hh, &mm) != 2 || mm != 0)
            throw ValueOutOfRange(row, "cannot parse time \"" + fields[cols.time] + "\"");

        if (row == 1) {
            year.year = yy;
            if (hh == 1)
                hour_offset = -1;
            else if (hh != 0)
                throw ValueOutOfRange(row, "first row must start at 00:00 or 01:00");
        }
        const int hour = hh + hour_offset;

        // Rows must walk the 365-day calendar hour by hour.
        const long k = row - 1;
        const CalendarDate expect = date_from_day_of_year(static_cast<int>(k / 24) + 1);
        if (!valid_date(month, day) || month != expect.month || day != expect.day ||
            hour != static_cast<int>(k % 24))
            throw ValueOutOfRange(row, "timestamp out of sequence (got " +
                                           fields[cols.date] + " " + fields[cols.time] +
                                           ")");

        WeatherRecord rec;
        rec.timestamp = CivilHour{month, day, hour};
        rec.ghi = parse_number(fields[cols.ghi], row, "GHI");
        rec.dni = parse_number(fields[cols.dni], row, "DNI");
        rec.dhi = parse_number(fields[cols.dhi], row, "DHI");
        rec.dry_bulb = parse_number(fields[cols.dry_bulb], row, "dry-bulb");
        check_record_bounds(rec, row);
        year.records.push_back(rec);
    }
    if (row != kHoursPerYear) throw RowCountMismatch(kHoursPerYear, row);
    return year;
}

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

void write_tmy3(const WeatherYear& year, std::ostream& out) {
    out << year.station << "\n";
    out << kDateCol << ',' << kTimeCol << ',' << kGhiCol << ',' << kDniCol << ','
        << kDhiCol << ',' << kDryBulbCol << "\n";
    char stamp[32];
    for (const WeatherRecord& r : year.records) {
        // hour-ending time, per the TMY3 convention
        std::snprintf(stamp, sizeof(stamp), "%02d/%02d/%04d,%02d:00",
                      r.timestamp.month, r.timestamp.day, year.year,
                      r.timestamp.hour + 1);
        out << stamp << ',' << shortest(r.ghi) << ',' << shortest(r.dni) << ','
            << shortest(r.dhi) << ',' << shortest(r.dry_bulb) << "\n";
    }
}

WeatherDay slice_day(const WeatherYear& year, CalendarDate date, std::string location_id) {
    const int doy = day_of_year(date.month, date.day);  // throws DateNotFound
    if (year.records.size() != kHoursPerYear)
        throw DateNotFound("weather year is incomplete");
    WeatherDay day;
    day.location_id = std::move(location_id);
    const size_t base = static_cast<size_t>(doy - 1) * 24;
    std::copy_n(year.records.begin() + base, 24, day.records.begin());
    return day;
}

WeatherDay slice_hours(const WeatherYear& year, long start_hour, std::string location_id) {
    if (year.records.size() != kHoursPerYear)
        throw DateNotFound("weather year is incomplete");
    WeatherDay day;
    day.location_id = std::move(location_id);
    const long n = kHoursPerYear;
    for (int h = 0; h < 24; ++h)
        day.records[h] = year.records[((start_hour + h) % n + n) % n];
    return day;
}

// --- Solar position -----------------------------------------------------------

namespace {

// Cooper declination, radians.
double declination(int doy) { return rad(23.45) * std::sin(2.0 * kPi * (284 + doy) / 365.0); }

// Equation of time in hours (Spencer series).
double equation_of_time(int doy) {
    const double g = 2.0 * kPi * (doy - 1) / 365.0;
    const double minutes =
        229.18 * (0.000075 + 0.001868 * std::cos(g) - 0.032077 * std::sin(g) -
                  0.014615 * std::cos(2 * g) - 0.040890 * std::sin(2 * g));
    return minutes / 60.0;
}

}  // namespace

SunPosition sun_position(const CivilHour& t, const SiteGeometry& geo) {
    const int doy = day_of_year(t.month, t.day);
    const double solar_time = t.hour + equation_of_time(doy) +
                              (geo.longitude - 15.0 * geo.tz_offset) / 15.0;
    const double hour_angle = rad(15.0 * (solar_time - 12.0));
    const double decl = declination(doy);
    const double lat = rad(geo.latitude);

    SunPosition pos;
    pos.cos_zenith = std::sin(lat) * std::sin(decl) +
                     std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
    // Azimuth via the atan2 form (measured from south, west positive), shifted
    // to the clockwise-from-north convention.
    const double az_south = std::atan2(
        std::sin(hour_angle),
        std::cos(hour_angle) * std::sin(lat) - std::tan(decl) * std::cos(lat));
    pos.azimuth_deg = std::fmod(180.0 + az_south * 180.0 / kPi + 360.0, 360.0);
    return pos;
}

double cos_incidence(const SunPosition& sun, double tilt_deg, double azimuth_deg) {
    const double cz = std::clamp(sun.cos_zenith, -1.0, 1.0);
    const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    return cz * std::cos(rad(tilt_deg)) +
           sz * std::sin(rad(tilt_deg)) * std::cos(rad(sun.azimuth_deg - azimuth_deg));
}

double plane_of_array(const WeatherRecord& rec, const SiteGeometry& geo) {
    const SunPosition sun = sun_position(rec.timestamp, geo);
    const double cos_tilt = std::cos(rad(geo.panel_tilt));
    double beam = 0.0;
    if (sun.cos_zenith > 0.0)
        beam = rec.dni * std::max(0.0, cos_incidence(sun, geo.panel_tilt, geo.panel_azimuth));
    const double sky = rec.dhi * (1.0 + cos_tilt) / 2.0;
    const double ground = rec.ghi * geo.albedo * (1.0 - cos_tilt) / 2.0;
    return beam + sky + ground;
}

}  // namespace solargrid
