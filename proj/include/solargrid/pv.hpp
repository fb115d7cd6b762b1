#ifndef SOLARGRID_PV_HPP
#define SOLARGRID_PV_HPP

#include <array>

#include "solargrid/weather.hpp"

namespace solargrid {

/// Panel rating. Default matches a 15% single-crystal silicon module with a
/// NOCT cell-temperature model; the unitized basis is 1 m^2.
struct PanelSpec {
    double efficiency = 0.15;    // at standard test conditions
    double temp_coeff = -0.004;  // 1/degC, power derating per degree above 25 C
    double noct = 45.0;          // nominal operating cell temperature, degC
    double unit_area = 1.0;      // m^2
};

/// DC output per m^2 of panel:
///   cell = ambient + poa*(noct - 20)/800
///   out  = poa * efficiency * (1 + temp_coeff*(cell - 25)), floored at 0
double panel_power(double poa_wm2, double ambient_c, const PanelSpec& spec);

/// Hourly energy produced per m^2 of panel.
struct ProductionTrace {
    std::array<double, 24> kwh_per_m2{};
};

ProductionTrace simulate_unit_panel_day(const PanelSpec& spec, const WeatherDay& day,
                                        const SiteGeometry& geo);

constexpr double kSqftPerSqm = 10.7639;

}  // namespace solargrid

#endif
