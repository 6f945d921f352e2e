#pragma once

#include "exsim/exergy.hpp"
#include "exsim/tables.hpp"

namespace exsim {

/// Interior permanent-magnet machine: map-based power flow plus a
/// physics-based loss model for heat and entropy generation.
struct MotorParams {
  Grid2D eff_map;              // (|tau| [Nm], omega [rad/s]) -> eta
  double tau_max = 329.0;      // Nm
  double p_max = 193e3;        // W
  double r_s0 = 4.7973e-3;     // Ohm at T0
  double xi = 0.0039;          // 1/K
  double l_d = 0.3752e-3;      // H
  double l_q = 0.4184e-3;      // H
  double lambda_pm = 0.1194;   // Wb
  int n_pp = 4;
  double k_h = 27.543;
  double k_f = 1e-3;           // W s^2/rad^2
  double c_copper = 4903.6;    // J/K
  double c_iron = 33401.0;     // J/K
  double h_copper = 27.0270;   // W/K
  double h_iron = 66.6667;     // W/K
  double alpha = 0.15;         // copper mass fraction
  double beta = 0.85;          // iron mass fraction

  double heat_capacity() const { return alpha * c_copper + beta * c_iron; }
  double h_out() const { return alpha * h_copper + beta * h_iron; }
  /// sqrt(3/2) lambda_pm.
  double flux_linkage() const;

  /// Largest torque magnitude available at omega (torque and power limits).
  double torque_limit(double omega) const;

  void validate() const;
};

/// Bilinear lookup on the (|tau|, omega) grid, clamped to the hull.
double map_efficiency(const MotorParams& p, double tau, double omega);

struct ShaftPower {
  double p_mot = 0.0;   // W, shaft side
  double torque = 0.0;  // Nm, signed, saturated at tau_max
  double eta = 1.0;
};

/// Shaft power for a battery-side power: P_batt eta when motoring,
/// P_batt / eta when generating. The torque is |P_mot / omega| capped at
/// tau_max; at omega = 0 no power is exchanged.
ShaftPower shaft_power(const MotorParams& p, double p_batt, double omega);

/// Electrical power that produces shaft torque tau at omega:
/// tau omega / eta when motoring, tau omega eta when generating.
double electrical_power(const MotorParams& p, double tau, double omega);

struct DqCurrents {
  double i_d = 0.0;  // A
  double i_q = 0.0;  // A
};

/// Electromagnetic torque 1.5 N_pp (lambda_pm i_q + (L_d - L_q) i_d i_q).
double dq_torque(const MotorParams& p, double i_d, double i_q);

/// d-axis current on the MTPA locus for a given i_q.
double mtpa_id(const MotorParams& p, double i_q);

/// Minimum-magnitude current pair producing tau (MTPA). Throws
/// std::invalid_argument when |tau| > tau_max and NumericError when the
/// bisection does not converge.
DqCurrents mtpa_currents(const MotorParams& p, double tau);

struct MotorState {
  double temperature = 298.15;  // K
  DqCurrents currents;
  double losses = 0.0;  // W, last step
};

struct MotorLosses {
  double copper = 0.0;  // W
  double iron = 0.0;    // W
  double fric = 0.0;    // W

  double total() const { return copper + iron + fric; }
};

/// Copper, iron and friction losses at (tau, omega) with the winding at T.
MotorLosses motor_losses(const MotorParams& p, const DqCurrents& i, double omega, double T,
                         const ReferenceState& ref);

struct MotorExergy {
  MotorLosses losses;
  double heat = 0.0;         // (1 - T0/T) h (T0 - T), <= 0
  double destruction = 0.0;  // -(T0/T) losses, <= 0
  double total = 0.0;        // heat + destruction
  double entropy_gen = 0.0;  // losses / T [W/K]
};

struct MotorStep {
  MotorState next;
  MotorExergy exergy;
};

/// Losses and exergy rates at the start-of-step temperature; the lumped
/// temperature follows the exact solution under constant losses.
MotorStep step_motor(const MotorParams& p, const MotorState& state, double tau, double omega,
                     const ReferenceState& ref, double dt);

}  // namespace exsim
