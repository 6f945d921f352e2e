#pragma once

#include <vector>

#include "exsim/battery.hpp"
#include "exsim/config.hpp"

namespace exsim {

struct DriverState {
  double integral = 0.0;  // m
  double last_increment = 0.0;
  double last_target = 0.0;
  bool started = false;
};

/// PI speed loop. Returns the signed wheel-force demand [N] (positive:
/// traction, negative: braking), clamped to the driver limits. The
/// proportional term acts on target_v - actual_v; the integrator
/// accumulates the tracking error against the previous call's target and
/// does not advance while the output is clamped.
double driver_step(DriverState& state, double target_v, double actual_v, const DriverParams& p, double dt);

/// Anti-windup hook: withdraws the last integrator update when the
/// actuators could not deliver the demand.
void driver_hold(DriverState& state);

/// Machine speed [rad/s] at vehicle speed v through a fixed ratio.
double machine_speed(double v, double wheel_radius, double ratio);

/// Wheel force produced by a net machine torque at the wheels (sum of
/// tau_i ratio_i): eta_diff applies when the machines drive the wheels,
/// 1/eta_diff when the wheels drive the machines.
double wheel_force(double wheel_torque, const ChassisParams& chassis);

struct Dispatch {
  double tau_mot = 0.0;  // Nm, per motor
  double tau_eng = 0.0;  // Nm
  double f_trac = 0.0;   // N, delivered by the machines
  double f_brake = 0.0;  // N, friction brakes
  double p_batt = 0.0;   // W, battery terminal (all motors)
  double mdot_fuel = 0.0;  // kg/s
  double u = 1.0;        // motor share of the wheel torque
  bool saturated = false;  // traction demand not met
};

/// EV power path: traction through the motors within torque, power and
/// battery discharge limits; braking regenerative first, the remainder on
/// the friction brakes. The demand is split equally between the motors.
Dispatch ev_dispatch(double force, double v, const SimConfig& cfg, const PackParams& pack, double soc);

struct EcmsCandidate {
  double u = 0.0;
  double tau_eng = 0.0;
  double tau_mot = 0.0;
  double p_batt = 0.0;
  double mdot_fuel = 0.0;
  double cost = 0.0;  // kg/s
  bool feasible = false;
};

/// s (1 + k_soc (SoC_ref - SoC)), with s chosen by the sign of P_batt and
/// floored at 0.
double ecms_equivalence(const EcmsParams& p, double soc, double p_batt);

/// Evaluates the torque-split grid u_k = -1 + 2k/(n-1) for a traction
/// demand `force` > 0. u = 1 is the engine-off candidate.
std::vector<EcmsCandidate> ecms_candidates(double force, double v, double soc, const SimConfig& cfg,
                                           const PackParams& pack);

/// Feasible candidate of least cost; ties go to the smaller |P_batt|.
/// Throws DispatchError when no candidate is feasible. A non-positive
/// demand turns the engine off and leaves all torques at 0.
EcmsCandidate ecms_split(double force, double v, double soc, const SimConfig& cfg, const PackParams& pack);

/// HEV power path: ECMS for traction (the demand is first reduced to the
/// largest force some candidate can deliver), motor-only regeneration
/// plus friction brakes for braking.
Dispatch hev_dispatch(double force, double v, const SimConfig& cfg, const PackParams& pack, double soc);

}  // namespace exsim
