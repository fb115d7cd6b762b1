#include "solargrid/storage.hpp"

#include <algorithm>
#include <numeric>

#include "solargrid/csvfmt.hpp"
#include "solargrid/errors.hpp"

namespace solargrid {

StorageEstimate estimate_storage(const std::array<double, 24>& cons_mwh,
                                 const std::array<double, 24>& prod_unit_mwh_per_m2) {
    const double total_cons = std::accumulate(cons_mwh.begin(), cons_mwh.end(), 0.0);
    const double total_prod = std::accumulate(prod_unit_mwh_per_m2.begin(),
                                              prod_unit_mwh_per_m2.end(), 0.0);
    if (total_cons <= 0.0) return {};
    if (total_prod <= 0.0)
        throw ZeroProduction("no solar production in the simulated day");

    StorageEstimate est;
    est.area_m2 = total_cons / total_prod;

    // Net injection per hour; sums to zero by the sizing above, so the running
    // sum is periodic over the cyclic day.
    std::array<double, 24> net{};
    for (int t = 0; t < 24; ++t)
        net[t] = prod_unit_mwh_per_m2[t] * est.area_m2 - cons_mwh[t];

    // Maximum peak-to-trough decline of the running sum over the doubled
    // sequence; a decline never spans more than one full period.
    std::array<double, 49> walk{};
    for (int k = 0; k < 48; ++k) walk[k + 1] = walk[k] + net[k % 24];
    double drawdown = 0.0;
    for (int j = 0; j <= 48; ++j) {
        double peak = walk[j];
        for (int i = std::max(0, j - 24); i <= j; ++i) peak = std::max(peak, walk[i]);
        drawdown = std::max(drawdown, peak - walk[j]);
    }
    est.storage_mwh = drawdown;
    return est;
}

std::string storage_report_csv(const std::vector<StorageReportRow>& rows) {
    std::string out = "location,daily_consumption_gwh,required_storage_gwh,local_area_m2\n";
    for (const auto& r : rows) {
        out += r.location;
        out += ',';
        out += csv_num(r.daily_consumption_gwh);
        out += ',';
        out += csv_num(r.required_storage_gwh);
        out += ',';
        out += csv_num(r.local_area_m2);
        out += '\n';
    }
    return out;
}

}  // namespace solargrid
