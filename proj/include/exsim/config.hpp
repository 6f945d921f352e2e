#pragma once

#include <string>
#include <string_view>

#include "exsim/battery.hpp"
#include "exsim/engine.hpp"
#include "exsim/exergy.hpp"
#include "exsim/motor.hpp"
#include "exsim/vehicle.hpp"

namespace exsim {

enum class Architecture { EV, HEV };

std::string_view architecture_name(Architecture a);
/// "ev"/"hev", case-insensitive. Throws ConfigError otherwise.
Architecture architecture_from_name(std::string_view name);

/// PI speed loop acting on the previewed target speed.
struct DriverParams {
  double kp = 2108.0;              // N/(m/s)
  double ki = 420.0;               // N/m
  double max_traction = 2.0e4;     // N
  double max_brake = 3.0e4;        // N

  void validate() const;
};

struct EcmsParams {
  double s_charge = 2.6;
  double s_discharge = 2.6;
  double soc_ref = 0.5;
  double k_soc = 8.0;
  int candidates = 41;

  void validate() const;
};

struct SimConfig {
  Architecture architecture = Architecture::EV;
  double dt = 0.0;  // s; 0 selects the cycle sampling step

  ReferenceState ref = ReferenceState::standard();
  ChassisParams chassis;

  CellParams cell;
  int n_series = 110;
  int n_parallel = 46;
  double soe0 = 0.75;
  double t_batt0 = 298.15;  // K

  MotorParams motor;
  int motor_count = 2;
  double motor_ratio = 9.73;  // omega_mot / omega_wheel
  double t_mot0 = 298.15;     // K

  EngineParams engine;
  double engine_ratio = 5.0;  // omega_eng / omega_wheel

  DriverParams driver;
  EcmsParams ecms;

  PackParams pack() const { return upscale(cell, n_series, n_parallel); }
  bool has_engine() const { return architecture == Architecture::HEV; }

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

/// Parameter sets of the two case-study vehicles with the synthetic maps.
SimConfig ev_preset();
SimConfig hev_preset();
SimConfig preset(Architecture a);

}  // namespace exsim
