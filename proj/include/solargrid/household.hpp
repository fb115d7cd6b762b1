#ifndef SOLARGRID_HOUSEHOLD_HPP
#define SOLARGRID_HOUSEHOLD_HPP

#include <array>

#include "solargrid/weather.hpp"

namespace solargrid {

/// Thermal envelope and HVAC plant of the model house.
struct HouseModel {
    double floor_area = 1735.0;              // ft^2
    double envelope_ua = 250.0;              // heat loss coefficient, W/degC
    double mass_capacitance = 2.0e7;         // interior thermal mass, J/degC
    double mass_surface_conductance = 1800;  // air<->mass coupling, W/degC
    double glazing_gain_fraction = 0.5;      // fraction of window POA entering as heat
    double window_area = 18.0;               // m^2
    double hvac_capacity = 10000.0;          // thermal W, heating and cooling
    double hvac_cop_cool = 3.0;
    double hvac_cop_heat = 2.5;
    double deadband = 1.0;                   // degC
};

/// Air-node capacitance in J/degC, derived from the floor area (2.5 m ceiling,
/// light-mass multiplier 3 to cover furnishings and drywall).
double air_capacitance(const HouseModel& house);

struct WaterHeater {
    double tank_volume = 200.0;   // L
    double setpoint = 55.0;       // degC
    double inlet_temp = 15.0;     // degC
    double heater_power = 4500.0; // W
    double standby_ua = 2.0;      // W/degC
};

/// Aggregate appliance load decomposed into constant-impedance, constant-current
/// and constant-power fractions of a base power.
struct ZipLoad {
    double base_power = 1200.0;  // W at nominal voltage
    double z_frac = 0.3;
    double i_frac = 0.3;
    double p_frac = 0.4;  // fractions must sum to 1
};

/// 24-hour setpoint and usage schedules, indexed by local hour of day.
struct ScheduleSet {
    std::array<double, 24> heating_setpoint{};  // degC
    std::array<double, 24> cooling_setpoint{};  // degC
    std::array<double, 24> hot_water_draw{};    // L/h
    std::array<double, 24> zip_multiplier{};    // dimensionless >= 0
    std::array<double, 24> internal_gain{};     // W
};

enum class HvacMode { off, heat, cool };

struct ThermalState {
    double air_temp = 20.0;   // degC
    double mass_temp = 20.0;  // degC
    HvacMode mode = HvacMode::off;  // thermostat hysteresis memory
};

/// Schedule slice for one hour of thermal simulation.
struct HourSetpoints {
    double heating_setpoint;  // degC
    double cooling_setpoint;  // degC
    double internal_gain;     // W
};

struct ThermalHourResult {
    ThermalState state;    // state after the hour
    double hvac_kwh;       // electrical energy drawn by the HVAC
    HvacMode mode;         // mode active at the end of the hour
};

/// Advance the two-node (air + interior mass) RC network by one hour using 60
/// forward-Euler sub-steps, so thermostat switching within the hour is captured.
/// Gains (glazing solar + internal) enter the air node. Throws NonFiniteState
/// if the integration blows up.
ThermalHourResult thermal_step(const ThermalState& state, const HouseModel& house,
                               const WeatherRecord& rec, const HourSetpoints& sched,
                               double poa_wm2, double dt_s = 3600.0);

/// Electrical energy (kWh) to heat the hour's draw volume from inlet to
/// setpoint plus standby loss, capped at heater_power * 1h. The standby term
/// is floored at zero when ambient exceeds the setpoint.
double water_heater_energy(const WaterHeater& wh, double draw_l, double ambient_c);

/// ZIP power at a given per-unit voltage:
///   P = mult * base_power * (z*v^2 + i*v + p)
double zip_power(const ZipLoad& zip, double v_ratio, double mult);

/// Hourly electrical consumption of one house over a 24-hour day, with the
/// per-component breakdown. kwh[h] = hvac[h] + water_heater[h] + zip[h].
struct ConsumptionTrace {
    std::array<double, 24> kwh{};
    std::array<double, 24> hvac_kwh{};
    std::array<double, 24> water_heater_kwh{};
    std::array<double, 24> zip_kwh{};
};

/// Simulate one house for one day. Initial air and mass temperature are the
/// hour-0 heating setpoint; voltage is nominal (v_ratio = 1) throughout.
ConsumptionTrace simulate_house_day(const HouseModel& house, const WaterHeater& wh,
                                    const ZipLoad& zip, const ScheduleSet& sched,
                                    const WeatherDay& day, const SiteGeometry& geo);

}  // namespace solargrid

#endif
