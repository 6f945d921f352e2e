#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "exsim/battery.hpp"
#include "exsim/defaults.hpp"
#include "exsim/error.hpp"

using namespace exsim;

namespace {

CellParams nmc_cell(double v_nom = 400.0 / 110) {
  CellParams c;
  c.v_nom = v_nom;
  c.ocv = synthetic_ocv_curve();
  c.r0 = synthetic_r0_curve();
  return c;
}

CellParams flat_cell() {
  CellParams c;
  c.ocv = Curve({0.0, 1.0}, {3.6, 3.6});
  c.r0 = Curve({0.0, 1.0}, {0.02, 0.02});
  return c;
}

}  // namespace

TEST(Pack, UpscaleOfTheEvPack) {
  const auto p = upscale(nmc_cell(), 110, 46);
  EXPECT_NEAR(p.v_nom, 400.0, 1e-9);
  EXPECT_NEAR(p.q_nom, 223.1, 1e-9);
  EXPECT_NEAR(p.e_nom / 3.6e6, 89.24, 1e-9);
  EXPECT_LT(std::abs(p.e_nom / 3.6e6 - 90.0) / 90.0, 0.01);
  EXPECT_NEAR(p.heat_capacity, 110 * 46 * 156.3790, 1e-6);
  EXPECT_NEAR(p.r0(0.5), 110.0 / 46.0 * nmc_cell().r0(0.5), 1e-15);
}

TEST(Pack, UpscaleRejectsEmptyPack) { EXPECT_THROW(upscale(nmc_cell(), 0, 1), std::invalid_argument); }

TEST(Pack, CellValidation) {
  auto c = nmc_cell();
  EXPECT_NO_THROW(c.validate());
  c.v_max = 2.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = nmc_cell();
  c.ocv = Curve({0.1, 1.0}, {3.0, 4.0});
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Current, MatchesQuadraticRoot) {
  const auto p = upscale(nmc_cell(), 110, 46);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> soc(0.05, 0.95), frac(-1.0, 0.99);
  for (int k = 0; k < 2000; ++k) {
    const double s = soc(rng);
    const double voc = p.v_oc(s), r = p.r0(s);
    const double pmax = voc * voc / (4 * r);
    const double P = frac(rng) * pmax;
    const double expect = (voc - std::sqrt(voc * voc - 4 * r * P)) / (2 * r);
    const auto sol = solve_current(p, s, P);
    EXPECT_NEAR(sol.current, expect, 1e-9 * (1.0 + std::abs(expect)));
    EXPECT_NEAR(sol.voltage * sol.current, P, 1e-6 * (1.0 + std::abs(P)));
  }
}

TEST(Current, BeyondCapabilityThrows) {
  const auto p = upscale(nmc_cell(), 55, 1);
  const double voc = p.v_oc(0.5), r = p.r0(0.5);
  EXPECT_THROW(solve_current(p, 0.5, 1.01 * voc * voc / (4 * r)), PowerLimitError);
  EXPECT_DOUBLE_EQ(solve_current(p, 0.5, 0.0).current, 0.0);
}

TEST(Current, PowerWindowRespectsVoltageLimits) {
  const auto p = upscale(nmc_cell(), 55, 1);
  for (double s = 0.05; s < 0.96; s += 0.05) {
    const auto w = power_limits(p, s);
    const auto d = solve_current(p, s, w.discharge);
    EXPECT_GE(d.voltage / p.n_series, p.cell.v_min - 1e-9);
    const auto c = solve_current(p, s, -w.charge);
    EXPECT_LE(c.voltage / p.n_series, p.cell.v_max + 1e-9);
  }
}

TEST(BatteryStep, ChargeAndEnergyUpdates) {
  const auto p = upscale(flat_cell(), 10, 2);
  BatteryState s;
  s.soc = s.soe = 0.5;
  const auto ref = ReferenceState::standard();
  const auto st = step_battery(p, s, 100.0, ref, 10.0);
  const double i = solve_current(p, 0.5, 100.0).current;
  EXPECT_NEAR(st.next.soc, 0.5 - 10 * i / (3600 * p.q_nom), 1e-15);
  EXPECT_NEAR(st.next.soe, 0.5 - 10 * 100.0 / p.e_nom, 1e-15);
  EXPECT_DOUBLE_EQ(st.exergy.work, -100.0);
  EXPECT_NEAR(st.exergy.total, st.exergy.heat + st.exergy.work + st.exergy.destruction, 1e-12);
}

TEST(BatteryStep, ThermalUpdateIsExactForConstantCurrent) {
  // Constant R0 and V_oc: the temperature ODE is linear with a constant
  // source, so one step of length 2h equals two steps of length h.
  const auto p = upscale(flat_cell(), 10, 1);
  const auto ref = ReferenceState::standard();
  BatteryState s;
  s.temperature = 310.0;
  const auto one = step_battery(p, s, 500.0, ref, 20.0);
  auto half = step_battery(p, s, 500.0, ref, 10.0).next;
  half = step_battery(p, half, 500.0, ref, 10.0).next;
  EXPECT_NEAR(one.next.temperature, half.temperature, 1e-10);

  // Closed form against an independent evaluation.
  const double q = p.r0(0.5) * std::pow(solve_current(p, 0.5, 500.0).current, 2);
  const double tss = ref.T0 + q / p.h_out;
  EXPECT_NEAR(one.next.temperature, tss + (310.0 - tss) * std::exp(-20.0 * p.h_out / p.heat_capacity), 1e-10);
}

TEST(BatteryStep, TemperatureNeverDropsBelowDeadState) {
  const auto p = upscale(nmc_cell(), 55, 1);
  const auto ref = ReferenceState::standard();
  BatteryState s;
  for (int k = 0; k < 500; ++k) {
    s = step_battery(p, s, k % 2 ? 3000.0 : -3000.0, ref, 1.0).next;
    ASSERT_GE(s.temperature, ref.T0);
  }
}

TEST(BatteryStep, OverchargeThrows) {
  const auto p = upscale(nmc_cell(), 55, 1);
  BatteryState s;
  s.soc = 0.9999;
  EXPECT_THROW(step_battery(p, s, -5000.0, ReferenceState::standard(), 10.0), ChargeLimitError);
}

TEST(BatteryStep, EntropyGenerationIsNonNegative) {
  const auto p = upscale(nmc_cell(), 110, 46);
  const auto ref = ReferenceState::standard();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> soc(0.1, 0.9), frac(-1.0, 1.0), temp(0.0, 40.0);
  for (int k = 0; k < 10000; ++k) {
    BatteryState s;
    s.soc = soc(rng);
    s.temperature = ref.T0 + temp(rng);
    const auto w = power_limits(p, s.soc);
    const double f = frac(rng);
    const double P = f > 0 ? f * w.discharge : f * w.charge;
    const auto st = step_battery(p, s, P, ref, 1.0);
    ASSERT_GE(st.exergy.entropy_gen, 0.0);
    ASSERT_LE(st.exergy.destruction, 0.0);
    ASSERT_LE(st.exergy.heat, 0.0);
  }
}

TEST(BatteryExergyState, InitialExergyIsChargeTimesEnergy) {
  const auto p = upscale(nmc_cell(), 110, 46);
  EXPECT_DOUBLE_EQ(initial_exergy(p, 0.75), 0.75 * p.e_nom);
  EXPECT_THROW(initial_exergy(p, 1.5), std::invalid_argument);
}
