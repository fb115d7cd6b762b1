#include "solargrid/household.hpp"

#include <cmath>
#include <string>

#include "solargrid/errors.hpp"

namespace solargrid {

namespace {

constexpr double kJoulesPerKwh = 3.6e6;
constexpr double kWaterHeatCapacity = 4186.0;  // J/(L*degC)
constexpr int kSubSteps = 60;                  // per hour

constexpr double kSqmPerSqft = 0.09290304;
constexpr double kCeilingHeight = 2.5;        // m
constexpr double kAirVolHeatCapacity = 1206;  // J/(m^3*degC), rho*cp at ~20 C
constexpr double kAirMassMultiplier = 3.0;    // furnishings, drywall

}  // namespace

double air_capacitance(const HouseModel& house) {
    const double volume = house.floor_area * kSqmPerSqft * kCeilingHeight;
    return volume * kAirVolHeatCapacity * kAirMassMultiplier;
}

namespace {

HvacMode thermostat(HvacMode prev, double air, const HourSetpoints& sp, double deadband) {
    const double half = deadband / 2.0;
    switch (prev) {
        case HvacMode::heat:
            return air < sp.heating_setpoint + half ? HvacMode::heat : HvacMode::off;
        case HvacMode::cool:
            return air > sp.cooling_setpoint - half ? HvacMode::cool : HvacMode::off;
        case HvacMode::off:
            break;
    }
    if (air < sp.heating_setpoint - half) return HvacMode::heat;
    if (air > sp.cooling_setpoint + half) return HvacMode::cool;
    return HvacMode::off;
}

}  // namespace

ThermalHourResult thermal_step(const ThermalState& state, const HouseModel& house,
                               const WeatherRecord& rec, const HourSetpoints& sched,
                               double poa_wm2, double dt_s) {
    const double ca = air_capacitance(house);
    const double cm = house.mass_capacitance;
    const double sub_dt = dt_s / kSubSteps;
    const double gains = house.glazing_gain_fraction * house.window_area * poa_wm2 +
                         sched.internal_gain;

    double air = state.air_temp;
    double mass = state.mass_temp;
    HvacMode mode = state.mode;
    double electrical_j = 0.0;

    for (int s = 0; s < kSubSteps; ++s) {
        mode = thermostat(mode, air, sched, house.deadband);
        double q_hvac = 0.0;
        if (mode == HvacMode::heat) {
            q_hvac = house.hvac_capacity;
            electrical_j += house.hvac_capacity / house.hvac_cop_heat * sub_dt;
        } else if (mode == HvacMode::cool) {
            q_hvac = -house.hvac_capacity;
            electrical_j += house.hvac_capacity / house.hvac_cop_cool * sub_dt;
        }

        const double q_air = house.envelope_ua * (rec.dry_bulb - air) +
                             house.mass_surface_conductance * (mass - air) + gains +
                             q_hvac;
        const double q_mass = house.mass_surface_conductance * (air - mass);
        air += q_air / ca * sub_dt;
        mass += q_mass / cm * sub_dt;
    }
    if (!std::isfinite(air) || !std::isfinite(mass))
        throw NonFiniteState("thermal integration diverged (air=" + std::to_string(air) +
                             ", mass=" + std::to_string(mass) + ")");

    return ThermalHourResult{ThermalState{air, mass, mode},
                             electrical_j / kJoulesPerKwh, mode};
}

double water_heater_energy(const WaterHeater& wh, double draw_l, double ambient_c) {
    const double draw_j = draw_l * kWaterHeatCapacity * (wh.setpoint - wh.inlet_temp);
    const double standby_j = std::max(0.0, wh.standby_ua * (wh.setpoint - ambient_c)) * 3600.0;
    const double cap_j = wh.heater_power * 3600.0;
    return std::min(draw_j + standby_j, cap_j) / kJoulesPerKwh;
}

double zip_power(const ZipLoad& zip, double v_ratio, double mult) {
    return mult * zip.base_power *
           (zip.z_frac * v_ratio * v_ratio + zip.i_frac * v_ratio + zip.p_frac);
}

ConsumptionTrace simulate_house_day(const HouseModel& house, const WaterHeater& wh,
                                    const ZipLoad& zip, const ScheduleSet& sched,
                                    const WeatherDay& day, const SiteGeometry& geo) {
    ConsumptionTrace trace;
    // Schedules are indexed by the record's local hour of day, so windows that
    // start mid-day (utc-aligned slicing) stay schedule-consistent.
    const int h0 = day.records[0].timestamp.hour;
    ThermalState state{sched.heating_setpoint[h0], sched.heating_setpoint[h0],
                       HvacMode::off};
    for (int h = 0; h < 24; ++h) {
        const WeatherRecord& rec = day.records[h];
        const int lh = rec.timestamp.hour;
        const double poa = plane_of_array(rec, geo);
        const HourSetpoints sp{sched.heating_setpoint[lh], sched.cooling_setpoint[lh],
                               sched.internal_gain[lh]};
        ThermalHourResult hour;
        try {
            hour = thermal_step(state, house, rec, sp, poa);
        } catch (const NonFiniteState& e) {
            throw NonFiniteState("hour " + std::to_string(h) + ": " + e.what());
        }
        trace.hvac_kwh[h] = hour.hvac_kwh;
        // Tank sits indoors; standby loss runs against the room air.
        trace.water_heater_kwh[h] =
            water_heater_energy(wh, sched.hot_water_draw[lh], state.air_temp);
        trace.zip_kwh[h] = zip_power(zip, 1.0, sched.zip_multiplier[lh]) / 1000.0;
        trace.kwh[h] = trace.hvac_kwh[h] + trace.water_heater_kwh[h] + trace.zip_kwh[h];
        state = hour.state;
    }
    return trace;
}

}  // namespace solargrid
