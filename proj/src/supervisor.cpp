#include "exsim/supervisor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "exsim/error.hpp"

namespace exsim {

double driver_step(DriverState& state, double target_v, double actual_v, const DriverParams& p, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const double e = target_v - actual_v;
  const double e_track = state.started ? state.last_target - actual_v : e;
  state.last_target = target_v;
  state.started = true;
  const double trial = p.kp * e + p.ki * (state.integral + e_track * dt);
  if (trial > p.max_traction || trial < -p.max_brake) {
    state.last_increment = 0.0;
    return std::clamp(p.kp * e + p.ki * state.integral, -p.max_brake, p.max_traction);
  }
  state.integral += e_track * dt;
  state.last_increment = e_track * dt;
  return trial;
}

void driver_hold(DriverState& state) {
  state.integral -= state.last_increment;
  state.last_increment = 0.0;
}

double machine_speed(double v, double wheel_radius, double ratio) { return v / wheel_radius * ratio; }

double wheel_force(double wheel_torque, const ChassisParams& chassis) {
  if (wheel_torque >= 0.0) return wheel_torque * chassis.diff_efficiency / chassis.wheel_radius;
  return wheel_torque / (chassis.diff_efficiency * chassis.wheel_radius);
}

namespace {

/// Largest |tau| in [0, |tau0|] (sign of tau0) whose electrical power for
/// `count` machines stays within [-charge, discharge].
double battery_limited_torque(const MotorParams& m, int count, double tau0, double omega,
                              const PowerWindow& w) {
  auto ok = [&](double tau) {
    const double p = count * electrical_power(m, tau, omega);
    return p <= w.discharge && p >= -w.charge;
  };
  if (ok(tau0)) return tau0;
  double lo = 0.0, hi = tau0;
  for (int k = 0; k < 80; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (ok(mid)) lo = mid;
    else hi = mid;
  }
  return lo;
}

Dispatch regen_brake(double force, double v, const SimConfig& cfg, const PowerWindow& w) {
  Dispatch d;
  const auto& ch = cfg.chassis;
  const double omega = machine_speed(v, ch.wheel_radius, cfg.motor_ratio);
  if (omega > 0.0) {
    double tau = force * ch.wheel_radius * ch.diff_efficiency / (cfg.motor_ratio * cfg.motor_count);
    tau = std::max(tau, -cfg.motor.torque_limit(omega));
    tau = battery_limited_torque(cfg.motor, cfg.motor_count, tau, omega, w);
    d.tau_mot = tau;
    d.p_batt = cfg.motor_count * electrical_power(cfg.motor, tau, omega);
    d.f_trac = wheel_force(cfg.motor_count * tau * cfg.motor_ratio, ch);
  }
  d.f_brake = std::max(0.0, d.f_trac - force);
  return d;
}

}  // namespace

Dispatch ev_dispatch(double force, double v, const SimConfig& cfg, const PackParams& pack, double soc) {
  const auto w = power_limits(pack, soc);
  if (force < 0.0) return regen_brake(force, v, cfg, w);
  Dispatch d;
  if (force == 0.0) return d;
  const auto& ch = cfg.chassis;
  const double omega = machine_speed(v, ch.wheel_radius, cfg.motor_ratio);
  double tau = force * ch.wheel_radius / (ch.diff_efficiency * cfg.motor_ratio * cfg.motor_count);
  const double req = tau;
  tau = std::min(tau, cfg.motor.torque_limit(omega));
  tau = battery_limited_torque(cfg.motor, cfg.motor_count, tau, omega, w);
  d.tau_mot = tau;
  d.p_batt = cfg.motor_count * electrical_power(cfg.motor, tau, omega);
  d.f_trac = wheel_force(cfg.motor_count * tau * cfg.motor_ratio, ch);
  d.saturated = tau < req * (1.0 - 1e-12);
  return d;
}

double ecms_equivalence(const EcmsParams& p, double soc, double p_batt) {
  const double s = p_batt > 0.0 ? p.s_discharge : p.s_charge;
  return std::max(0.0, s * (1.0 + p.k_soc * (p.soc_ref - soc)));
}

std::vector<EcmsCandidate> ecms_candidates(double force, double v, double soc, const SimConfig& cfg,
                                           const PackParams& pack) {
  const auto& ch = cfg.chassis;
  const auto w = power_limits(pack, soc);
  const double omega_m = machine_speed(v, ch.wheel_radius, cfg.motor_ratio);
  const double omega_e = machine_speed(v, ch.wheel_radius, cfg.engine_ratio);
  const double tau_m_lim = cfg.motor.torque_limit(omega_m);
  const double tau_e_lim = cfg.engine.torque_limit(omega_e);
  // Machine-side wheel torque; the machines drive the wheels in every candidate.
  const double t_wheel = force * ch.wheel_radius / ch.diff_efficiency;

  const int n = cfg.ecms.candidates;
  std::vector<EcmsCandidate> out(n);
  for (int k = 0; k < n; ++k) {
    auto& c = out[k];
    c.u = k == n - 1 ? 1.0 : -1.0 + 2.0 * k / (n - 1);
    c.tau_mot = c.u * t_wheel / cfg.motor_ratio;
    c.tau_eng = k == n - 1 ? 0.0 : (1.0 - c.u) * t_wheel / cfg.engine_ratio;
    c.p_batt = electrical_power(cfg.motor, c.tau_mot, omega_m);
    c.mdot_fuel = fuel_rate(cfg.engine, c.tau_eng, omega_e);
    c.feasible = std::abs(c.tau_mot) <= tau_m_lim && c.tau_eng <= tau_e_lim && c.p_batt <= w.discharge &&
                 c.p_batt >= -w.charge;
    c.cost = c.mdot_fuel + ecms_equivalence(cfg.ecms, soc, c.p_batt) * c.p_batt / cfg.engine.lhv;
  }
  return out;
}

EcmsCandidate ecms_split(double force, double v, double soc, const SimConfig& cfg, const PackParams& pack) {
  if (force <= 0.0) {
    EcmsCandidate off;
    off.u = 1.0;
    off.feasible = true;
    return off;
  }
  const auto cands = ecms_candidates(force, v, soc, cfg, pack);
  const EcmsCandidate* best = nullptr;
  for (const auto& c : cands) {
    if (!c.feasible) continue;
    if (best == nullptr || c.cost < best->cost ||
        (c.cost == best->cost && std::abs(c.p_batt) < std::abs(best->p_batt))) {
      best = &c;
    }
  }
  if (best == nullptr) throw DispatchError("no feasible torque split for " + std::to_string(force) + " N");
  return *best;
}

namespace {

bool any_feasible(double force, double v, double soc, const SimConfig& cfg, const PackParams& pack) {
  const auto cands = ecms_candidates(force, v, soc, cfg, pack);
  return std::any_of(cands.begin(), cands.end(), [](const EcmsCandidate& c) { return c.feasible; });
}

}  // namespace

Dispatch hev_dispatch(double force, double v, const SimConfig& cfg, const PackParams& pack, double soc) {
  if (force < 0.0) return regen_brake(force, v, cfg, power_limits(pack, soc));
  Dispatch d;
  if (force == 0.0) return d;
  double f = force;
  if (!any_feasible(f, v, soc, cfg, pack)) {
    double lo = 0.0, hi = f;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      if (any_feasible(mid, v, soc, cfg, pack)) lo = mid;
      else hi = mid;
    }
    f = lo;
    d.saturated = true;
    if (f <= 0.0) return d;
  }
  const auto c = ecms_split(f, v, soc, cfg, pack);
  d.u = c.u;
  d.tau_mot = c.tau_mot;
  d.tau_eng = c.tau_eng;
  d.p_batt = c.p_batt;
  d.mdot_fuel = c.mdot_fuel;
  d.f_trac = wheel_force(c.tau_mot * cfg.motor_ratio + c.tau_eng * cfg.engine_ratio, cfg.chassis);
  return d;
}

}  // namespace exsim
