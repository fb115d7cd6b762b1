#include "solargrid/pv.hpp"

#include <algorithm>

namespace solargrid {

double panel_power(double poa_wm2, double ambient_c, const PanelSpec& spec) {
    const double cell = ambient_c + poa_wm2 * (spec.noct - 20.0) / 800.0;
    const double out = poa_wm2 * spec.efficiency * (1.0 + spec.temp_coeff * (cell - 25.0));
    return std::max(0.0, out);
}

ProductionTrace simulate_unit_panel_day(const PanelSpec& spec, const WeatherDay& day,
                                        const SiteGeometry& geo) {
    ProductionTrace trace;
    for (int h = 0; h < 24; ++h) {
        const double poa = plane_of_array(day.records[h], geo);
        trace.kwh_per_m2[h] = panel_power(poa, day.records[h].dry_bulb, spec) / 1000.0;
    }
    return trace;
}

}  // namespace solargrid
