#include "exsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "exsim/battery.hpp"
#include "exsim/error.hpp"
#include "exsim/motor.hpp"
#include "exsim/supervisor.hpp"
#include "exsim/vehicle.hpp"

namespace exsim {

namespace {

std::vector<double> time_grid(const DriveCycle& cycle, double dt) {
  if (dt <= 0.0) return cycle.times();
  std::vector<double> g;
  const double end = cycle.duration();
  const auto n = static_cast<long long>(std::floor(end / dt + 1e-9));
  for (long long k = 0; k <= n; ++k) g.push_back(static_cast<double>(k) * dt);
  if (end - g.back() > 1e-9 * std::max(1.0, end)) g.push_back(end);
  return g;
}

void push_row(TimeSeries& s) {
  for (auto* col : {&s.t, &s.v_target, &s.v, &s.soc, &s.soe, &s.c_rate, &s.t_batt, &s.t_mot, &s.v_eval,
                    &s.f_trac, &s.f_brake, &s.u_split, &s.tau_mot,
                    &s.tau_eng, &s.p_batt, &s.mdot_fuel, &s.x_veh, &s.x_rel, &s.s_gen_batt, &s.s_gen_mot}) {
    col->push_back(0.0);
  }
  s.rates.push_back({});
}

double& rate(TimeSeries& s, Term t) { return s.rates.back()[static_cast<std::size_t>(t)]; }

}  // namespace

double relative_exergy(double x_veh, Architecture arch, const PackParams& pack, const EngineParams& engine) {
  double x_max = pack.e_nom;
  if (arch == Architecture::HEV) x_max += max_fuel_exergy(engine);
  if (!(x_max > 0.0)) throw std::invalid_argument("relative exergy needs a positive maximum");
  return x_veh / x_max;
}

double powertrain_losses(const ExergyLedger& ledger, Architecture arch) {
  double l = ledger.total(Term::Traction) + ledger.total(Term::BatteryWork);
  if (arch == Architecture::HEV) l += ledger.total(Term::EngineWork);
  return l;
}

SimResult run(const SimConfig& cfg, const DriveCycle& cycle) {
  cfg.validate();
  if (cycle.empty()) throw std::invalid_argument("cycle is empty");

  const bool hev = cfg.has_engine();
  const auto pack = cfg.pack();
  const auto& ch = cfg.chassis;
  const auto& ref = cfg.ref;
  const CombustionStoich stoich = stoichiometry(cfg.engine.x, cfg.engine.y);
  const double n_mot = cfg.motor_count;

  SimResult res;
  res.architecture = cfg.architecture;
  auto& sum = res.summary;
  sum.x_batt_max = pack.e_nom;
  sum.x_fuel_max = hev ? max_fuel_exergy(cfg.engine) : 0.0;
  const double x_max = sum.x_batt_max + sum.x_fuel_max;
  double x_veh = initial_exergy(pack, cfg.soe0) + sum.x_fuel_max;
  res.ledger = ExergyLedger(x_veh, x_max);
  auto& ledger = res.ledger;
  auto& s = res.series;

  LongitudinalState lon{cycle.speed_at(0.0), 0.0};
  BatteryState batt;
  batt.soc = cfg.soe0;
  batt.soe = cfg.soe0;
  batt.temperature = cfg.t_batt0;
  batt.voltage = pack.v_oc(batt.soc);
  MotorState mot;
  mot.temperature = cfg.t_mot0;
  DriverState drv;

  const auto grid = time_grid(cycle, cfg.dt);
  push_row(s);
  s.t.back() = 0.0;
  s.v_target.back() = cycle.speed_at(0.0);
  s.v.back() = lon.v;
  s.soc.back() = batt.soc;
  s.soe.back() = batt.soe;
  s.t_batt.back() = batt.temperature;
  s.t_mot.back() = mot.temperature;
  s.x_veh.back() = x_veh;
  s.x_rel.back() = x_veh / x_max;
  ledger.record(0.0, x_veh);

  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const double dt = grid[k + 1] - grid[k];
    try {
      const double target = cycle.speed_at(grid[k + 1]);
      const double demand = driver_step(drv, target, lon.v, cfg.driver, dt);

      auto dispatch = [&](double v_eval) {
        return hev ? hev_dispatch(demand, v_eval, cfg, pack, batt.soc)
                   : ev_dispatch(demand, v_eval, cfg, pack, batt.soc);
      };
      // Machine speeds follow the step-average speed, which in turn depends
      // on the delivered force: fixed-point iteration.
      const auto res0 = resistive_forces(lon.v, ch);
      double v_eval = 0.5 * (lon.v + std::max(0.0, predict_speed(lon.v, demand - res0.aero - res0.roll, ch, dt)));
      Dispatch d;
      LongitudinalStep ls;
      double v_disp = v_eval;
      for (int it = 0; it < 50; ++it) {
        v_disp = v_eval;
        d = dispatch(v_disp);
        ls = step_longitudinal(lon, d.f_trac, d.f_brake, ch, dt);
        const bool done = std::abs(ls.v_eval - v_eval) <= 1e-12 * (1.0 + v_eval);
        v_eval = ls.v_eval;
        if (done) break;
      }
      if (d.saturated) driver_hold(drv);

      // The zero-speed clamp may have trimmed regenerative traction.
      if (ls.f_trac != d.f_trac && d.f_trac != 0.0) d.tau_mot *= ls.f_trac / d.f_trac;
      const double w_mot = machine_speed(ls.v_eval, ch.wheel_radius, cfg.motor_ratio);
      const double w_eng = machine_speed(ls.v_eval, ch.wheel_radius, cfg.engine_ratio);
      const double p_batt = n_mot * electrical_power(cfg.motor, d.tau_mot, w_mot);

      const auto bs = step_battery(pack, batt, p_batt, ref, dt);
      const auto ms = step_motor(cfg.motor, mot, d.tau_mot, w_mot, ref, dt);
      EngineExergy ex;
      if (hev) ex = engine_exergy(cfg.engine, stoich, d.tau_eng, w_eng, ref);
      if (!ex.consistent) ++sum.inconsistent_engine_steps;

      push_row(s);
      rate(s, Term::Traction) = ls.power.trac;
      rate(s, Term::Brake) = -ls.power.brake;
      rate(s, Term::Rolling) = -ls.power.roll;
      rate(s, Term::Aero) = -ls.power.aero;
      rate(s, Term::BatteryWork) = bs.exergy.work;
      rate(s, Term::BatteryDestruction) = bs.exergy.destruction;
      rate(s, Term::BatteryHeat) = bs.exergy.heat;
      rate(s, Term::MotorHeat) = n_mot * ms.exergy.heat;
      rate(s, Term::MotorDestruction) = n_mot * ms.exergy.destruction;
      rate(s, Term::EngineFuel) = ex.fuel;
      rate(s, Term::EngineWork) = ex.work;
      rate(s, Term::EngineExhaust) = ex.exhaust;
      rate(s, Term::EngineHeat) = ex.heat;
      rate(s, Term::EngineFriction) = ex.friction;
      rate(s, Term::EngineCombustion) = ex.combustion;
      for (std::size_t i = 0; i < kTermCount; ++i) ledger.add(static_cast<Term>(i), s.rates.back()[i] * dt);

      // Component-wise vehicle balance, kept separate from the per-term ledger.
      const double x_dot = ls.power.longitudinal + bs.exergy.total + n_mot * ms.exergy.total - ex.fuel;
      x_veh += x_dot * dt;

      lon = ls.next;
      batt = bs.next;
      mot = ms.next;

      s.t.back() = grid[k + 1];
      s.v_target.back() = target;
      s.v.back() = lon.v;
      s.soc.back() = batt.soc;
      s.soe.back() = batt.soe;
      s.c_rate.back() = batt.current / pack.n_parallel / pack.cell.q_nom;
      s.t_batt.back() = batt.temperature;
      s.t_mot.back() = mot.temperature;
      s.v_eval.back() = v_disp;
      s.f_trac.back() = ls.f_trac;
      s.f_brake.back() = ls.f_brake;
      s.u_split.back() = hev ? d.u : 1.0;
      s.tau_mot.back() = d.tau_mot;
      s.tau_eng.back() = d.tau_eng;
      s.p_batt.back() = p_batt;
      s.mdot_fuel.back() = ex.mdot_fuel;
      s.x_veh.back() = x_veh;
      s.x_rel.back() = x_veh / x_max;
      s.s_gen_batt.back() = bs.exergy.entropy_gen;
      s.s_gen_mot.back() = n_mot * ms.exergy.entropy_gen;
      ledger.record(grid[k + 1], x_veh);

      sum.fuel_mass += ex.mdot_fuel * dt;
      sum.max_tracking_error = std::max(sum.max_tracking_error, std::abs(lon.v - target));
    } catch (const SimulationError&) {
      throw;
    } catch (const std::exception& e) {
      throw SimulationError(k + 1, e.what());
    }
  }

  sum.delta_soe = s.soe.back() - s.soe.front();
  sum.delta_soc = s.soc.back() - s.soc.front();
  sum.delta_x_rel = s.x_rel.back() - s.x_rel.front();
  sum.powertrain_loss = powertrain_losses(ledger, cfg.architecture);
  sum.losses = ledger.close();
  return res;
}

std::vector<FuelSample> fuel_samples(const SimResult& result) {
  std::vector<FuelSample> out;
  const auto& s = result.series;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.mdot_fuel[i] > 0.0) out.push_back({s.t[i] - s.t[i - 1], s.mdot_fuel[i]});
  }
  return out;
}

double calibrate_heat_coefficient(const SimConfig& cfg, const DriveCycle& cycle, double target) {
  if (!cfg.has_engine()) throw ConfigError("heat-coefficient calibration needs an engine");
  const auto result = run(cfg, cycle);
  return calibrate_a(cfg.engine, fuel_samples(result), cfg.ref, target);
}

}  // namespace exsim
