#pragma once

namespace exsim {

struct ChassisParams {
  double mass = 2108.0;           // kg
  double frontal_area = 2.34;     // m^2
  double drag_coeff = 0.24;       // -
  double roll_coeff = 0.009;      // -
  double wheel_radius = 0.483;    // m
  double air_density = 1.18;      // kg/m^3
  double gravity = 9.81;          // m/s^2
  double diff_efficiency = 0.98;  // -

  /// Throws ConfigError on a violated invariant.
  void validate() const;
};

struct LongitudinalState {
  double v = 0.0;  // m/s
  double x = 0.0;  // m
};

struct ResistiveForces {
  double aero = 0.0;
  double roll = 0.0;
};

/// Aerodynamic drag and rolling resistance. Rolling resistance is zero at
/// standstill: static friction does no work.
ResistiveForces resistive_forces(double v, const ChassisParams& p);

/// Powers at the wheels [W]; brake/roll/aero are non-negative magnitudes.
struct PowerTerms {
  double trac = 0.0;
  double brake = 0.0;
  double roll = 0.0;
  double aero = 0.0;
  double longitudinal = 0.0;  // m v_dot v
};

struct LongitudinalStep {
  LongitudinalState next;
  /// Forces actually applied; brake, regenerative traction and rolling
  /// force are reduced when the full force would reverse the vehicle.
  double f_trac = 0.0;
  double f_brake = 0.0;
  double f_roll = 0.0;
  double f_aero = 0.0;
  /// Speed at which the step's powers are evaluated: (v + v') / 2.
  double v_eval = 0.0;
  bool stopped = false;  // clamped at zero speed
  PowerTerms power;
};

/// Forward-Euler speed update over dt. Powers are force times the
/// step-average speed, so the longitudinal power integrates exactly to the
/// kinetic-energy change.
LongitudinalStep step_longitudinal(const LongitudinalState& state, double f_trac, double f_brake,
                                   const ChassisParams& p, double dt);

/// Speed at the end of the step without the zero clamp.
double predict_speed(double v, double net_force, const ChassisParams& p, double dt);

/// Rate of change of the longitudinal exergy: P_trac - P_brake - P_roll - P_aero.
double hamiltonian_rate(const PowerTerms& p);

}  // namespace exsim
