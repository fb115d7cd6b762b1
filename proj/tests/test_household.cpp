#include "solargrid/household.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "solargrid/errors.hpp"

using namespace solargrid;

namespace {

HouseModel fixture_house() {
    HouseModel h;
    h.floor_area = 1735.0;
    h.envelope_ua = 250.0;
    h.mass_capacitance = 2.5e7;
    h.mass_surface_conductance = 2000.0;
    h.glazing_gain_fraction = 0.5;
    h.window_area = 16.0;
    h.hvac_capacity = 10000.0;
    h.hvac_cop_cool = 3.0;
    h.hvac_cop_heat = 2.5;
    h.deadband = 0.5;
    return h;
}

WeatherRecord outdoor(double temp) {
    WeatherRecord rec;
    rec.timestamp = CivilHour{2, 1, 12};
    rec.dry_bulb = temp;
    return rec;
}

ScheduleSet flat_schedule(double heat, double cool) {
    ScheduleSet s;
    s.heating_setpoint.fill(heat);
    s.cooling_setpoint.fill(cool);
    s.hot_water_draw.fill(0.0);
    s.zip_multiplier.fill(0.0);
    s.internal_gain.fill(0.0);
    return s;
}

WeatherDay constant_day(double temp) {
    WeatherDay day;
    for (int h = 0; h < 24; ++h) {
        day.records[h].timestamp = CivilHour{2, 1, h};
        day.records[h].dry_bulb = temp;
    }
    return day;
}

}  // namespace

TEST(ThermalStep, EquilibriumStaysOffAndUnchanged) {
    const HouseModel house = fixture_house();
    const double mid = 22.0;  // midpoint of 20/24
    const ThermalState state{mid, mid, HvacMode::off};
    const HourSetpoints sp{20.0, 24.0, 0.0};
    const auto result = thermal_step(state, house, outdoor(mid), sp, 0.0);
    EXPECT_EQ(result.mode, HvacMode::off);
    EXPECT_EQ(result.hvac_kwh, 0.0);
    EXPECT_DOUBLE_EQ(result.state.air_temp, mid);
    EXPECT_DOUBLE_EQ(result.state.mass_temp, mid);
}

TEST(ThermalStep, AdiabaticInvariance) {
    HouseModel house = fixture_house();
    house.envelope_ua = 0.0;
    house.mass_surface_conductance = 0.0;
    const ThermalState state{23.0, 19.0, HvacMode::off};
    const HourSetpoints sp{10.0, 35.0, 0.0};  // wide band keeps HVAC off
    ThermalState s = state;
    for (int h = 0; h < 24; ++h) {
        const auto result = thermal_step(s, house, outdoor(-10.0), sp, 0.0);
        EXPECT_EQ(result.mode, HvacMode::off);
        s = result.state;
    }
    EXPECT_NEAR(s.air_temp, 23.0, 1e-9);
    EXPECT_NEAR(s.mass_temp, 19.0, 1e-9);
}

// Fixture house held at the cooling setpoint on a constant hot day: the
// average electrical draw approaches UA*dT/COP.
TEST(ThermalStep, SteadyStateCoolingMatchesEnergyBalance) {
    const HouseModel house = fixture_house();
    const HourSetpoints sp{18.0, 24.0, 0.0};
    ThermalState s{24.0, 24.0, HvacMode::off};
    double kwh_last24 = 0.0;
    for (int h = 0; h < 72; ++h) {
        const auto result = thermal_step(s, house, outdoor(35.0), sp, 0.0);
        s = result.state;
        if (h >= 48) kwh_last24 += result.hvac_kwh;
    }
    const double expected = 250.0 * (35.0 - 24.0) / 3.0 / 1000.0;  // kWh per hour
    EXPECT_NEAR(kwh_last24 / 24.0, expected, 0.02 * expected);
}

TEST(ThermalStep, MonotoneRelaxationTowardOutdoor) {
    const HouseModel house = fixture_house();
    const HourSetpoints sp{-50.0, 90.0, 0.0};  // HVAC never engages
    ThermalState s{30.0, 30.0, HvacMode::off};
    double prev_air = s.air_temp;
    for (int h = 0; h < 150; ++h) {
        const auto result = thermal_step(s, house, outdoor(10.0), sp, 0.0);
        s = result.state;
        EXPECT_LE(s.air_temp, prev_air + 1e-12) << "hour " << h;
        EXPECT_GE(s.air_temp, 10.0) << "hour " << h;  // sign never flips
        prev_air = s.air_temp;
    }
    EXPECT_NEAR(s.air_temp, 10.0, 1.0);  // essentially relaxed after ~5 time constants
}

TEST(ThermalStep, ThermostatNeverHeatsAboveCoolingBand) {
    // Heating from far below the band must stop inside the deadband, never
    // running straight into cooling.
    const HouseModel house = fixture_house();
    const HourSetpoints sp{20.0, 21.0, 0.0};
    ThermalState s{5.0, 5.0, HvacMode::off};
    for (int h = 0; h < 24; ++h) {
        const auto result = thermal_step(s, house, outdoor(5.0), sp, 0.0);
        s = result.state;
        EXPECT_NE(result.mode, HvacMode::cool);
        EXPECT_LT(s.air_temp, 21.0 + house.deadband);
    }
}

TEST(ThermalStep, BlowUpReportsNonFiniteState) {
    HouseModel house = fixture_house();
    house.mass_capacitance = 1e-6;  // forward Euler cannot survive this
    const ThermalState state{20.0, 25.0, HvacMode::off};
    const HourSetpoints sp{10.0, 35.0, 0.0};
    EXPECT_THROW(thermal_step(state, house, outdoor(0.0), sp, 0.0), NonFiniteState);
}

TEST(WaterHeater, NoDrawNoStandbyLoss) {
    WaterHeater wh;
    wh.setpoint = 55.0;
    EXPECT_EQ(water_heater_energy(wh, 0.0, 55.0), 0.0);
}

TEST(WaterHeater, HandComputedDrawEnergy) {
    WaterHeater wh;
    wh.setpoint = 55.0;
    wh.inlet_temp = 15.0;
    wh.heater_power = 1e9;  // cap far away
    wh.standby_ua = 0.0;
    // 100 L * 4186 J/(L*C) * 40 C = 16.744 MJ = 4.651 kWh
    EXPECT_NEAR(water_heater_energy(wh, 100.0, 55.0), 4.6511, 1e-3);
}

TEST(WaterHeater, CapBindsAtHeaterPower) {
    WaterHeater wh;
    wh.setpoint = 55.0;
    wh.inlet_temp = 5.0;
    wh.heater_power = 4500.0;
    wh.standby_ua = 0.0;
    EXPECT_DOUBLE_EQ(water_heater_energy(wh, 1e6, 55.0), 4.5);
}

TEST(WaterHeater, StandbyFlooredWhenAmbientHot) {
    WaterHeater wh;
    wh.setpoint = 55.0;
    wh.standby_ua = 5.0;
    EXPECT_EQ(water_heater_energy(wh, 0.0, 60.0), 0.0);
}

TEST(ZipPower, NominalVoltageIdentity) {
    const ZipLoad zip{1000.0, 0.5, 0.3, 0.2};
    EXPECT_DOUBLE_EQ(zip_power(zip, 1.0, 1.0), 1000.0);
    EXPECT_DOUBLE_EQ(zip_power(zip, 1.0, 0.35), 350.0);
}

TEST(ZipPower, OffIsZero) {
    const ZipLoad zip{1000.0, 0.5, 0.3, 0.2};
    EXPECT_EQ(zip_power(zip, 0.95, 0.0), 0.0);
}

TEST(ZipPower, UnderVoltageHandValue) {
    const ZipLoad zip{1000.0, 0.5, 0.3, 0.2};
    EXPECT_NEAR(zip_power(zip, 0.95, 1.0), 936.25, 1e-9);
}

TEST(SimulateHouseDay, NullScenarioIsAllZeros) {
    HouseModel house = fixture_house();
    WaterHeater wh;
    wh.standby_ua = 0.0;
    const ZipLoad zip{1000.0, 0.5, 0.3, 0.2};
    const ScheduleSet sched = flat_schedule(20.0, 24.0);
    // Outdoor pinned to the initial temperature (hour-0 heating setpoint).
    const WeatherDay day = constant_day(20.0);
    const ConsumptionTrace trace = simulate_house_day(house, wh, zip, sched, day, {});
    for (int h = 0; h < 24; ++h) EXPECT_EQ(trace.kwh[h], 0.0) << "hour " << h;
}

TEST(SimulateHouseDay, ComponentsAreNonnegativeAndSum) {
    const HouseModel house = fixture_house();
    WaterHeater wh;
    ZipLoad zip{1500.0, 0.4, 0.3, 0.3};
    ScheduleSet sched = flat_schedule(20.0, 24.0);
    sched.hot_water_draw.fill(8.0);
    sched.zip_multiplier.fill(0.8);
    sched.internal_gain.fill(200.0);
    const WeatherDay day = constant_day(-5.0);
    const ConsumptionTrace trace = simulate_house_day(house, wh, zip, sched, day, {});
    for (int h = 0; h < 24; ++h) {
        EXPECT_GE(trace.hvac_kwh[h], 0.0);
        EXPECT_GE(trace.water_heater_kwh[h], 0.0);
        EXPECT_GE(trace.zip_kwh[h], 0.0);
        EXPECT_DOUBLE_EQ(trace.kwh[h], trace.hvac_kwh[h] + trace.water_heater_kwh[h] +
                                           trace.zip_kwh[h]);
    }
    const double total = std::accumulate(trace.kwh.begin(), trace.kwh.end(), 0.0);
    EXPECT_GT(total, 10.0);  // freezing day forces real heating
}

TEST(SimulateHouseDay, DoublingZipBaseDoublesOnlyZipComponent) {
    const HouseModel house = fixture_house();
    WaterHeater wh;
    ZipLoad zip{1500.0, 0.4, 0.3, 0.3};
    ScheduleSet sched = flat_schedule(20.0, 24.0);
    sched.zip_multiplier.fill(0.7);
    sched.hot_water_draw.fill(5.0);
    const WeatherDay day = constant_day(2.0);

    const ConsumptionTrace base = simulate_house_day(house, wh, zip, sched, day, {});
    zip.base_power *= 2.0;
    const ConsumptionTrace doubled = simulate_house_day(house, wh, zip, sched, day, {});
    for (int h = 0; h < 24; ++h) {
        EXPECT_DOUBLE_EQ(doubled.zip_kwh[h], 2.0 * base.zip_kwh[h]);
        EXPECT_DOUBLE_EQ(doubled.hvac_kwh[h], base.hvac_kwh[h]);
        EXPECT_DOUBLE_EQ(doubled.water_heater_kwh[h], base.water_heater_kwh[h]);
    }
}

TEST(SimulateHouseDay, DeterministicAcrossRuns) {
    const HouseModel house = fixture_house();
    const WaterHeater wh;
    const ZipLoad zip{1500.0, 0.4, 0.3, 0.3};
    ScheduleSet sched = flat_schedule(19.0, 25.0);
    sched.hot_water_draw.fill(6.0);
    sched.zip_multiplier.fill(1.0);
    const WeatherDay day = constant_day(-3.0);
    const ConsumptionTrace a = simulate_house_day(house, wh, zip, sched, day, {});
    const ConsumptionTrace b = simulate_house_day(house, wh, zip, sched, day, {});
    EXPECT_EQ(a.kwh, b.kwh);
    EXPECT_EQ(a.hvac_kwh, b.hvac_kwh);
}

TEST(SimulateHouseDay, NonFiniteStateNamesTheHour) {
    HouseModel house = fixture_house();
    house.mass_capacitance = 1e-6;
    const WaterHeater wh;
    const ZipLoad zip{0.0, 0.4, 0.3, 0.3};
    const ScheduleSet sched = flat_schedule(20.0, 24.0);
    const WeatherDay day = constant_day(0.0);
    try {
        simulate_house_day(house, wh, zip, sched, day, {});
        FAIL() << "expected NonFiniteState";
    } catch (const NonFiniteState& e) {
        EXPECT_NE(std::string(e.what()).find("hour"), std::string::npos);
    }
}
