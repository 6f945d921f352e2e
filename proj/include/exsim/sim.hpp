#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "exsim/config.hpp"
#include "exsim/cycle.hpp"
#include "exsim/engine.hpp"
#include "exsim/ledger.hpp"

namespace exsim {

/// One row per time-grid point; row 0 is the initial state with zero rates.
struct TimeSeries {
  std::vector<double> t;
  std::vector<double> v_target;
  std::vector<double> v;
  std::vector<double> soc;
  std::vector<double> soe;
  std::vector<double> c_rate;  // I_batt / N_p / Q_cell [1/h]
  std::vector<double> t_batt;
  std::vector<double> t_mot;
  std::vector<double> v_eval;   // step-average speed used by the dispatch
  std::vector<double> f_trac;   // N, machine force at the wheels
  std::vector<double> f_brake;  // N, friction brakes
  std::vector<double> u_split;  // motor share of the wheel torque (HEV)
  std::vector<double> tau_mot;  // per motor
  std::vector<double> tau_eng;
  std::vector<double> p_batt;
  std::vector<double> mdot_fuel;  // kg/s
  std::vector<double> x_veh;
  std::vector<double> x_rel;
  /// Ledger rates [W] of the step ending at the row, indexed by Term.
  std::vector<std::array<double, kTermCount>> rates;
  /// Entropy generation of battery and motors [W/K].
  std::vector<double> s_gen_batt;
  std::vector<double> s_gen_mot;

  std::size_t size() const { return t.size(); }
};

struct Summary {
  double delta_soe = 0.0;
  double delta_soc = 0.0;
  double delta_x_rel = 0.0;
  double fuel_mass = 0.0;  // kg
  double max_tracking_error = 0.0;  // m/s
  double powertrain_loss = 0.0;  // J, signed as in the ledger
  double x_batt_max = 0.0;       // J
  double x_fuel_max = 0.0;       // J
  std::size_t inconsistent_engine_steps = 0;  // positive combustion closure
  LossReport losses;
};

struct SimResult {
  Architecture architecture = Architecture::EV;
  TimeSeries series;
  ExergyLedger ledger;
  Summary summary;
};

/// Fixed-step forward simulation. Each step: driver (previewing the target
/// at the end of the step, acting on the current speed) -> dispatch at the
/// step-average speed -> longitudinal update -> battery, motor and engine
/// updates -> ledger. Throws SimulationError naming the step on any
/// component failure.
SimResult run(const SimConfig& cfg, const DriveCycle& cycle);

/// X_veh / X_max with X_max = E_nom (EV) or E_nom + X_fuel,max (HEV).
double relative_exergy(double x_veh, Architecture arch, const PackParams& pack, const EngineParams& engine);

/// E_trac - E_batt (+ X_work,eng for the HEV), in ledger sign convention.
double powertrain_losses(const ExergyLedger& ledger, Architecture arch);

/// Engine-on fuel samples of a run, for the heat-coefficient calibration.
std::vector<FuelSample> fuel_samples(const SimResult& result);

/// Runs the HEV on `cycle` and calibrates the Taylor & Toong coefficient.
double calibrate_heat_coefficient(const SimConfig& cfg, const DriveCycle& cycle, double target = 0.10);

}  // namespace exsim
