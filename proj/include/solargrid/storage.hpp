#ifndef SOLARGRID_STORAGE_HPP
#define SOLARGRID_STORAGE_HPP

#include <array>
#include <string>
#include <vector>

namespace solargrid {

struct StorageEstimate {
    double area_m2 = 0.0;       // local panel area sized so daily production = demand
    double storage_mwh = 0.0;   // minimum battery capacity for the cyclic day
};

/// Size a location's own panels to its daily energy balance, then find the
/// smallest battery that keeps a cyclic state-of-charge simulation of the
/// resulting net profile nonnegative (the maximum peak-to-trough decline of
/// the cyclic running net sum). Round-trip efficiency is 1. Throws
/// ZeroProduction when the day has no sun.
StorageEstimate estimate_storage(const std::array<double, 24>& cons_mwh,
                                 const std::array<double, 24>& prod_unit_mwh_per_m2);

struct StorageReportRow {
    std::string location;
    double daily_consumption_gwh = 0.0;
    double required_storage_gwh = 0.0;
    double local_area_m2 = 0.0;
};

/// `storage_report.csv` body:
/// location,daily_consumption_gwh,required_storage_gwh,local_area_m2
std::string storage_report_csv(const std::vector<StorageReportRow>& rows);

}  // namespace solargrid

#endif
