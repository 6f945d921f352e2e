#pragma once

#include "exsim/exergy.hpp"
#include "exsim/tables.hpp"

namespace exsim {

/// Zero-order equivalent-circuit cell: open-circuit source plus series
/// resistance, both functions of SoC.
struct CellParams {
  double q_nom = 4.85;        // Ah
  double v_nom = 400.0 / 110;  // V
  Curve ocv;                  // SoC -> V
  Curve r0;                   // SoC -> Ohm
  double heat_capacity = 156.3790;  // J/K
  double h_out = 0.2085;            // W/K
  double v_min = 2.5;  // V, discharge cut-off
  double v_max = 4.2;  // V, charge cut-off

  void validate() const;
};

/// Cell parameters scaled to an Ns x Np pack.
struct PackParams {
  CellParams cell;
  int n_series = 1;
  int n_parallel = 1;
  double v_nom = 0.0;          // V
  double q_nom = 0.0;          // Ah
  double e_nom = 0.0;          // J
  double heat_capacity = 0.0;  // J/K
  double h_out = 0.0;          // W/K

  double v_oc(double soc) const;
  double r0(double soc) const;
};

PackParams upscale(const CellParams& cell, int n_series, int n_parallel);

struct CurrentSolution {
  double current = 0.0;  // A, > 0 discharging
  double voltage = 0.0;  // V, terminal
};

/// Physical root of P = (V_oc - R0 I) I. Throws PowerLimitError when the
/// demand exceeds V_oc^2 / (4 R0).
CurrentSolution solve_current(const PackParams& pack, double soc, double p_batt);

/// Terminal-power window imposed by the cell voltage limits at `soc`.
struct PowerWindow {
  double discharge = 0.0;  // W, >= 0
  double charge = 0.0;     // W, >= 0 (magnitude)
};
PowerWindow power_limits(const PackParams& pack, double soc);

struct BatteryState {
  double soc = 0.5;
  double soe = 0.5;
  double temperature = 298.15;  // K
  double current = 0.0;         // A, last applied
  double voltage = 0.0;         // V, last terminal
};

/// Exergy rates of one step [W].
struct BatteryExergy {
  double heat = 0.0;         // (1 - T0/T) Qdot, <= 0
  double work = 0.0;         // -P_batt
  double destruction = 0.0;  // -(T0/T) R0 I^2, <= 0
  double total = 0.0;        // heat + work + destruction
  double entropy_gen = 0.0;  // R0 I^2 / T [W/K]
  double joule = 0.0;        // R0 I^2 [W]
};

struct BatteryStep {
  BatteryState next;
  BatteryExergy exergy;
};

/// Advances SoC/SoE with the current solved at the start of the step and
/// the lumped temperature with the exact solution of the linear thermal
/// ODE under constant heat generation. Throws ChargeLimitError when SoC
/// would leave [0, 1].
BatteryStep step_battery(const PackParams& pack, const BatteryState& state, double p_batt,
                         const ReferenceState& ref, double dt);

/// X_batt(0) = SoC0 E_nom.
double initial_exergy(const PackParams& pack, double soc0);

}  // namespace exsim
