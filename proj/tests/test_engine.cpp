#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "exsim/config.hpp"
#include "exsim/engine.hpp"
#include "exsim/error.hpp"

using namespace exsim;

namespace {

EngineParams engine() { return hev_preset().engine; }

std::vector<FuelSample> samples(unsigned seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> m(2e-4, 3e-3);
  std::vector<FuelSample> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back({1.0, m(rng)});
  return out;
}

// Heat-to-fuel exergy ratio evaluated from the correlation written out.
double ratio_oracle(const EngineParams& p, const std::vector<FuelSample>& s, const ReferenceState& ref) {
  const double area = std::numbers::pi * p.bore * p.bore / 4;
  double heat = 0, fuel = 0;
  for (const auto& x : s) {
    const double mdot = x.mdot_fuel * (1 + p.afr_stoich);
    const double q = p.a * p.k_g * std::pow(mdot / p.mu_g, p.b) * std::pow(p.bore, p.b - 1) *
                     std::pow(area, 1 - p.b) * (p.t_eng - p.t_c);
    heat += x.dt * (1 - ref.T0 / p.t_eng) * q;
    fuel += x.dt * 1.047015 * p.lhv * x.mdot_fuel;
  }
  return heat / fuel;
}

}  // namespace

TEST(Stoichiometry, Octane) {
  const auto s = stoichiometry(8, 18);
  EXPECT_DOUBLE_EQ(s.a, 8.0);
  EXPECT_DOUBLE_EQ(s.b, 9.0);
  EXPECT_DOUBLE_EQ(s.z, 12.5);
  EXPECT_DOUBLE_EQ(s.c, 47.0);
  EXPECT_DOUBLE_EQ(s.n_tot, 64.0);
  EXPECT_DOUBLE_EQ(s.fraction(Species::CO2), 0.125);
  EXPECT_DOUBLE_EQ(s.fraction(Species::H2O), 0.140625);
  EXPECT_DOUBLE_EQ(s.fraction(Species::N2), 0.734375);
  EXPECT_DOUBLE_EQ(s.fraction(Species::O2), 0.0);
  EXPECT_THROW(stoichiometry(0, 4), std::invalid_argument);
}

TEST(Stoichiometry, MethaneAndFractionsSumToOne) {
  const auto s = stoichiometry(1, 4);
  EXPECT_DOUBLE_EQ(s.z, 2.0);
  double sum = 0;
  for (auto k : kAllSpecies) sum += s.fraction(k);
  EXPECT_NEAR(sum, 1.0, 1e-15);
}

TEST(FuelExergy, GasolineAvailabilityFactor) {
  EXPECT_NEAR(fuel_availability_factor(8, 18), 1.047015, 1e-9);
  const auto p = engine();
  EXPECT_NEAR(specific_fuel_exergy(p) / 1e6, 49.52, 0.01);
  EXPECT_NEAR(max_fuel_exergy(p), 32.465 * specific_fuel_exergy(p), 1e-9 * max_fuel_exergy(p));
}

TEST(Exhaust, ExergyIsNegativeAndLinearInFuelFlow) {
  const auto p = engine();
  const auto st = stoichiometry(8, 18);
  const auto ref = ReferenceState::standard();
  const double x1 = exhaust_exergy_rate(p, st, 1e-3, ref);
  EXPECT_LT(x1, 0.0);
  EXPECT_NEAR(exhaust_exergy_rate(p, st, 2e-3, ref), 2 * x1, 1e-12 * std::abs(x1));
  EXPECT_DOUBLE_EQ(exhaust_exergy_rate(p, st, 0.0, ref), 0.0);
  // Hotter exhaust carries more availability.
  auto hot = p;
  hot.t_exh = 1000.0;
  EXPECT_LT(exhaust_exergy_rate(hot, st, 1e-3, ref), x1);
}

TEST(Friction, MeanEffectivePressureForm) {
  const auto p = engine();
  const double w = 300.0;
  const double fmep = p.fmep_c0 + p.fmep_c1 * w + p.fmep_c2 * w * w;
  EXPECT_NEAR(friction_power(p, w), fmep * p.v_d * w / (4 * std::numbers::pi), 1e-9);
  EXPECT_DOUBLE_EQ(friction_exergy_rate(p, w), -friction_power(p, w));
  EXPECT_DOUBLE_EQ(friction_power(p, 0.0), 0.0);
}

TEST(Friction, ShareOfFuelAtMidMap) {
  const auto p = engine();
  const double w = 0.5 * (p.omega_min + p.omega_max);
  const double tau = 0.5 * p.torque_limit(w);
  const double share = friction_power(p, w) / fuel_exergy_rate(p, fuel_rate(p, tau, w));
  EXPECT_GT(share, 0.035);
  EXPECT_LT(share, 0.065);
}

TEST(EngineBalance, CombustionClosesTheBalance) {
  const auto p = engine();
  const auto st = stoichiometry(8, 18);
  const auto ref = ReferenceState::standard();
  const auto e = engine_exergy(p, st, 80.0, 300.0, ref);
  EXPECT_NEAR(e.fuel + e.work + e.exhaust + e.heat + e.friction + e.combustion, 0.0, 1e-9 * e.fuel);
  EXPECT_TRUE(e.consistent);
  EXPECT_LT(e.combustion, 0.0);
  EXPECT_DOUBLE_EQ(e.work, -80.0 * 300.0);
  const auto off = engine_exergy(p, st, 0.0, 300.0, ref);
  EXPECT_DOUBLE_EQ(off.mdot_fuel, 0.0);
  EXPECT_DOUBLE_EQ(off.fuel, 0.0);
}

TEST(EngineBalance, ConsistentAcrossTheMap) {
  const auto p = engine();
  const auto st = stoichiometry(8, 18);
  const auto ref = ReferenceState::standard();
  for (double w = p.omega_min; w <= p.omega_max; w += 20.0) {
    for (double f = 0.05; f <= 1.0; f += 0.05) {
      EXPECT_TRUE(engine_exergy(p, st, f * p.torque_limit(w), w, ref).consistent) << w << " " << f;
    }
  }
}

TEST(EngineLimits, NoTorqueOutsideSpeedWindow) {
  const auto p = engine();
  EXPECT_DOUBLE_EQ(p.torque_limit(p.omega_min - 1), 0.0);
  EXPECT_DOUBLE_EQ(p.torque_limit(p.omega_max + 1), 0.0);
  EXPECT_GT(p.torque_limit(300.0), 100.0);
  EXPECT_DOUBLE_EQ(fuel_rate(p, -10.0, 300.0), 0.0);
}

TEST(Calibration, MatchesClosedForm) {
  // The heat flow is linear in a, so a* = target a / ratio(a).
  const auto ref = ReferenceState::standard();
  auto p = engine();
  p.a = 1.0;
  const auto s = samples(21, 500);
  const double expect = 0.10 / ratio_oracle(p, s, ref);
  const double a = calibrate_a(p, s, ref);
  EXPECT_NEAR(a, expect, 1e-9 * expect);
  p.a = a;
  EXPECT_NEAR(heat_fuel_ratio(p, s, ref), 0.10, 1e-10);
}

TEST(Calibration, DoubledFuelFlowReconverges) {
  const auto ref = ReferenceState::standard();
  auto p = engine();
  auto s = samples(22, 300);
  const double a1 = calibrate_a(p, s, ref);
  for (auto& x : s) x.mdot_fuel *= 2;
  const double a2 = calibrate_a(p, s, ref);
  EXPECT_NEAR(a2, a1 * std::pow(2.0, 1 - p.b), 1e-8 * a2);
  p.a = a2;
  EXPECT_NEAR(heat_fuel_ratio(p, s, ref), 0.10, 1e-10);
}

TEST(Calibration, Errors) {
  const auto ref = ReferenceState::standard();
  EXPECT_THROW(calibrate_a(engine(), {}, ref), CalibrationError);
  EXPECT_THROW(calibrate_a(engine(), {{1.0, 0.0}}, ref), CalibrationError);
  EXPECT_THROW(calibrate_a(engine(), samples(1, 10), ref, 0.10, 1.0, 2.0), CalibrationError);
}

TEST(EngineParamsCheck, Validation) {
  const auto ref = ReferenceState::standard();
  auto p = engine();
  EXPECT_NO_THROW(p.validate(ref));
  p.t_c = 250.0;
  EXPECT_THROW(p.validate(ref), ConfigError);
}
