#include <gtest/gtest.h>

#include <cmath>

#include "exsim/error.hpp"
#include "exsim/exergy.hpp"

using namespace exsim;

namespace {

const ThermoTable& table() { return ThermoTable::builtin(); }

// Composite Simpson rule.
template <class F>
double simpson(F f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST(Thermo, EnthalpyDerivativeIsCp) {
  for (auto s : kAllSpecies) {
    for (double T : {250.0, 298.15, 500.0, 800.0, 999.0, 1001.0, 1500.0, 2500.0}) {
      const double d = 1e-3;
      const double fd = (table().enthalpy(s, T + d) - table().enthalpy(s, T - d)) / (2 * d);
      EXPECT_NEAR(fd, table().cp(s, T), 1e-6 * table().cp(s, T)) << species_name(s) << " at " << T;
    }
  }
}

// Intervals stay inside one polynomial branch; the fits only meet with C0 continuity at t_mid.
TEST(Thermo, EntropyMatchesQuadratureOfCpOverT) {
  for (auto s : kAllSpecies) {
    for (auto [t1, t2] : {std::pair{298.15, 900.0}, std::pair{1100.0, 2000.0}, std::pair{300.0, 999.0}}) {
      const double q = simpson([&](double T) { return table().cp(s, T) / T; }, t1, t2);
      const double ds = table().entropy(s, t2) - table().entropy(s, t1);
      EXPECT_NEAR(ds, q, 1e-6 * std::abs(q)) << species_name(s);
    }
  }
}

TEST(Thermo, FormationEnthalpiesAtStandardState) {
  // kJ/mol at 298.15 K.
  EXPECT_NEAR(table().enthalpy(Species::N2, 298.15), 0.0, 5.0);
  EXPECT_NEAR(table().enthalpy(Species::O2, 298.15), 0.0, 5.0);
  EXPECT_NEAR(table().enthalpy(Species::H2O, 298.15) / 1e3, -241.83, 0.05);
  EXPECT_NEAR(table().enthalpy(Species::CO2, 298.15) / 1e3, -393.51, 0.05);
  EXPECT_NEAR(table().entropy(Species::N2, 298.15), 191.6, 0.1);
}

TEST(Thermo, PolynomialsContinuousAtMidpoint) {
  for (auto s : kAllSpecies) {
    const double tm = table().polynomial(s).t_mid;
    EXPECT_NEAR(table().cp(s, tm - 1e-9), table().cp(s, tm + 1e-9), 1e-2);
    EXPECT_NEAR(table().enthalpy(s, tm - 1e-9), table().enthalpy(s, tm + 1e-9), 5.0);
  }
}

TEST(Thermo, OutOfRangeTemperatureThrows) {
  EXPECT_THROW(table().cp(Species::N2, 100.0), DomainError);
  EXPECT_THROW(table().enthalpy(Species::CO2, 7000.0), DomainError);
}

TEST(Thermo, ParseRejectsMalformedTables) {
  EXPECT_THROW(ThermoTable::parse("N2, 200, 1000, 1, 2, 3\n"), ParseError);
  EXPECT_THROW(ThermoTable::parse("N2, 200, 1000, 1,0,0,0,0,0,0\n"), ParseError);
  EXPECT_THROW(ThermoTable::from_file("/nonexistent/nasa.dat"), IoError);
}

TEST(Reference, StandardStateIsValid) {
  const auto ref = ReferenceState::standard();
  EXPECT_NO_THROW(ref.validate());
  EXPECT_DOUBLE_EQ(ref.T0, 298.15);
  EXPECT_DOUBLE_EQ(ref.fraction(Species::O2), 0.2035);
}

TEST(Reference, FractionsMustSumToOne) {
  auto ref = ReferenceState::standard();
  ref.fractions["N2"] = 0.8;
  EXPECT_THROW(ref.validate(), DomainError);
  ref = ReferenceState::standard();
  ref.fractions.erase("CO2");
  EXPECT_THROW(ref.validate(), DomainError);
}

TEST(Exergy, CarnotFactor) {
  const auto ref = ReferenceState::standard();
  EXPECT_DOUBLE_EQ(carnot_factor(ref.T0, ref), 0.0);
  EXPECT_NEAR(carnot_factor(2 * ref.T0, ref), 0.5, 1e-15);
  EXPECT_THROW(carnot_factor(ref.T0 - 1, ref), DomainError);
  EXPECT_NEAR(heat_exergy_rate(-100.0, 2 * ref.T0, ref), -50.0, 1e-12);
}

TEST(Exergy, ChemicalExergyVanishesAtReferenceComposition) {
  const auto ref = ReferenceState::standard();
  for (auto s : kAllSpecies) EXPECT_NEAR(chemical_exergy(s, ref.fraction(s), ref), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(chemical_exergy(Species::O2, 0.0, ref), 0.0);
  const double expect = kGasConstant * ref.T0 * std::log(0.125 / 0.0003);
  EXPECT_NEAR(chemical_exergy(Species::CO2, 0.125, ref), expect, 1e-9 * expect);
}

TEST(Exergy, PhysicalExergyIsZeroAtDeadStateAndPositiveAbove) {
  const auto ref = ReferenceState::standard();
  for (auto s : kAllSpecies) {
    EXPECT_NEAR(physical_exergy(table(), s, ref.T0, ref), 0.0, 1e-9);
    double prev = 0.0;
    for (double T = 350.0; T < 2000.0; T += 150.0) {
      const double x = physical_exergy(table(), s, T, ref);
      EXPECT_GT(x, prev);
      prev = x;
    }
  }
}
