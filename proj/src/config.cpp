#include "exsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "exsim/defaults.hpp"
#include "exsim/error.hpp"

namespace exsim {

std::string_view architecture_name(Architecture a) { return a == Architecture::EV ? "ev" : "hev"; }

Architecture architecture_from_name(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "ev") return Architecture::EV;
  if (s == "hev") return Architecture::HEV;
  throw ConfigError("unknown architecture '" + std::string(name) + "' (expected ev or hev)");
}

void DriverParams::validate() const {
  if (kp < 0 || ki < 0) throw ConfigError("driver gains must be non-negative");
  if (!(max_traction > 0 && max_brake > 0)) throw ConfigError("driver force limits must be positive");
}

void EcmsParams::validate() const {
  if (!(s_charge > 0 && s_discharge > 0)) throw ConfigError("ECMS equivalence factors must be positive");
  if (!(soc_ref > 0 && soc_ref < 1)) throw ConfigError("ECMS SoC reference must lie in (0, 1)");
  if (k_soc < 0) throw ConfigError("ECMS SoC gain must be non-negative");
  if (candidates < 3 || candidates % 2 == 0) {
    throw ConfigError("ECMS candidate count must be odd and at least 3");
  }
}

void SimConfig::validate() const {
  if (dt < 0) throw ConfigError("time step must be positive (or 0 for the cycle step)");
  try {
    ref.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("reference state: ") + e.what());
  }
  chassis.validate();
  cell.validate();
  if (n_series < 1 || n_parallel < 1) throw ConfigError("pack needs at least one cell");
  if (!(soe0 >= 0 && soe0 <= 1)) throw ConfigError("initial SoE must lie in [0, 1]");
  if (!(t_batt0 >= ref.T0 && t_mot0 >= ref.T0)) throw ConfigError("initial temperatures must be >= T0");
  motor.validate();
  if (motor_count < 1) throw ConfigError("at least one motor is required");
  if (!(motor_ratio > 0)) throw ConfigError("motor ratio must be positive");
  driver.validate();
  if (has_engine()) {
    engine.validate(ref);
    if (!(engine_ratio > 0)) throw ConfigError("engine ratio must be positive");
    ecms.validate();
  }
}

SimConfig ev_preset() {
  SimConfig c;
  c.architecture = Architecture::EV;
  c.cell.v_nom = 400.0 / 110.0;
  c.cell.ocv = synthetic_ocv_curve();
  c.cell.r0 = synthetic_r0_curve();
  c.n_series = 110;
  c.n_parallel = 46;
  c.soe0 = 0.75;
  c.motor.tau_max = 329.0;
  c.motor.p_max = 193e3;
  c.motor.eff_map = synthetic_motor_map(c.motor.tau_max, c.motor.p_max, 1600.0);
  c.motor_count = 2;
  c.motor_ratio = 9.73;
  c.driver.kp = 1.0 * c.chassis.mass;
  c.driver.ki = 0.2 * c.chassis.mass;
  c.driver.max_traction = 2.0e4;
  c.driver.max_brake = 3.0e4;
  return c;
}

SimConfig hev_preset() {
  SimConfig c;
  c.architecture = Architecture::HEV;
  c.chassis.mass = 1360.0;
  c.chassis.frontal_area = 2.21;
  c.chassis.drag_coeff = 0.25;
  c.chassis.wheel_radius = 0.3;
  c.cell.v_nom = 201.6 / 55.0;
  c.cell.ocv = synthetic_ocv_curve();
  c.cell.r0 = synthetic_r0_curve();
  c.n_series = 55;
  c.n_parallel = 1;
  c.soe0 = 0.5;
  c.motor.tau_max = 200.0;
  c.motor.p_max = 125.6e3;
  c.motor.eff_map = synthetic_motor_map(c.motor.tau_max, c.motor.p_max, 1400.0);
  c.motor_count = 1;
  c.motor_ratio = 8.0;
  c.engine.fuel_map = synthetic_fuel_map(c.engine.lhv, c.engine.v_d);
  c.engine.max_torque = synthetic_engine_torque_curve();
  c.engine_ratio = 5.0;
  c.driver.kp = 1.0 * c.chassis.mass;
  c.driver.ki = 0.2 * c.chassis.mass;
  c.driver.max_traction = 1.5e4;
  c.driver.max_brake = 2.0e4;
  return c;
}

SimConfig preset(Architecture a) { return a == Architecture::EV ? ev_preset() : hev_preset(); }

}  // namespace exsim
