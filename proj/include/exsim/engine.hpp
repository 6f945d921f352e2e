#pragma once

#include <array>
#include <vector>

#include "exsim/exergy.hpp"
#include "exsim/tables.hpp"

namespace exsim {

/// Quasi-static spark-ignition engine. Stateless: every quantity is an
/// algebraic function of the operating point.
struct EngineParams {
  Grid2D fuel_map;      // (tau [Nm], omega [rad/s]) -> fuel flow [g/s]
  Curve max_torque;     // omega [rad/s] -> Nm
  double omega_min = 50.0;   // rad/s, lowest running speed
  double omega_max = 620.0;  // rad/s
  int x = 8;                 // C_x H_y
  int y = 18;
  double lhv = 47.3e6;        // J/kg
  double afr_stoich = 14.6;
  double v_tank = 43e-3;      // m^3
  double rho_fuel = 755.0;    // kg/m^3
  double bore = 0.0805;       // m
  double v_d = 1.8e-3;        // m^3
  double t_eng = 677.23;      // K, mixture
  double t_c = 373.15;        // K, coolant
  double k_g = 0.05;          // W/(m K)
  double mu_g = 3.26e-5;      // kg/(s m)
  double a = 12.17;           // Taylor & Toong, calibrated on WLTP class 3b
  double b = 0.75;
  double t_exh = 800.0;       // K
  double fmep_c0 = 0.97e5;    // Pa
  double fmep_c1 = 10.0;      // Pa s/rad
  double fmep_c2 = 0.02;      // Pa s^2/rad^2

  void validate(const ReferenceState& ref) const;

  /// Torque ceiling at omega; zero outside [omega_min, omega_max].
  double torque_limit(double omega) const;
  bool can_run(double omega) const { return omega >= omega_min && omega <= omega_max; }
};

/// C_x H_y + z (O2 + 3.76 N2) -> a CO2 + b H2O + c N2.
struct CombustionStoich {
  double a = 0.0;
  double b = 0.0;
  double z = 0.0;
  double c = 0.0;
  double n_tot = 0.0;
  std::array<double, 4> fractions{};  // indexed by Species
  double molar_mass = 0.0;            // kg/mol, exhaust mixture

  double fraction(Species s) const { return fractions[static_cast<std::size_t>(s)]; }
};

/// Throws std::invalid_argument unless x, y > 0.
CombustionStoich stoichiometry(int x, int y);

/// 1.04224 + 0.011925 x/y - 0.0042/x: chemical exergy over LHV.
double fuel_availability_factor(int x, int y);
/// Specific fuel chemical exergy [J/kg].
double specific_fuel_exergy(const EngineParams& p);
double fuel_exergy_rate(const EngineParams& p, double mdot_fuel);
/// Exergy of a full tank [J].
double max_fuel_exergy(const EngineParams& p);

/// Exhaust exergy rate [W], <= 0. Intake air carries no exergy.
double exhaust_exergy_rate(const EngineParams& p, const CombustionStoich& st, double mdot_fuel,
                           const ReferenceState& ref, const ThermoTable& table = ThermoTable::builtin());
/// Exhaust molar flow [mol/s].
double exhaust_molar_flow(const EngineParams& p, const CombustionStoich& st, double mdot_fuel);

/// Time-averaged in-cylinder heat flow [W], > 0 when heat leaves the gas.
double engine_heat_flow(const EngineParams& p, double mdot_fuel);
/// -(1 - T0/T_eng) Qdot_eng [W].
double engine_heat_exergy_rate(const EngineParams& p, double mdot_fuel, const ReferenceState& ref);

/// FMEP V_d omega / (4 pi) [W].
double friction_power(const EngineParams& p, double omega);
double friction_exergy_rate(const EngineParams& p, double omega);

/// Map fuel flow [kg/s]; zero when the engine is off (tau = 0).
double fuel_rate(const EngineParams& p, double tau, double omega);

struct EngineExergy {
  double mdot_fuel = 0.0;  // kg/s
  double fuel = 0.0;       // > 0, exergy supplied by the fuel
  double work = 0.0;       // -tau omega
  double exhaust = 0.0;
  double heat = 0.0;
  double friction = 0.0;
  double combustion = 0.0;  // closure
  /// False when the closure yields a positive combustion term.
  bool consistent = true;
};

/// All engine exergy rates at (tau, omega); the combustion
/// irreversibility closes the balance.
EngineExergy engine_exergy(const EngineParams& p, const CombustionStoich& st, double tau, double omega,
                           const ReferenceState& ref, const ThermoTable& table = ThermoTable::builtin());

/// Closure -X_fuel - X_work - X_exh - X_heat - X_fric.
double combustion_irreversibility(double fuel, double work, double exhaust, double heat, double friction);

struct FuelSample {
  double dt = 0.0;         // s
  double mdot_fuel = 0.0;  // kg/s
};

/// Heat-to-fuel exergy ratio integrated over the samples.
double heat_fuel_ratio(const EngineParams& p, const std::vector<FuelSample>& samples,
                       const ReferenceState& ref);

/// Bisection on the Taylor & Toong coefficient so that the integrated
/// heat exergy is `target` of the integrated fuel exergy. Throws
/// CalibrationError with no fuel or when the target is not bracketed.
double calibrate_a(const EngineParams& p, const std::vector<FuelSample>& samples,
                   const ReferenceState& ref, double target = 0.10, double a_lo = 1e-6,
                   double a_hi = 1e4);

}  // namespace exsim
