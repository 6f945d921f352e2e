#include "exsim/motor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "exsim/error.hpp"

namespace exsim {

double MotorParams::flux_linkage() const { return std::sqrt(1.5) * lambda_pm; }

double MotorParams::torque_limit(double omega) const {
  if (omega <= 0.0) return tau_max;
  return std::min(tau_max, p_max / omega);
}

void MotorParams::validate() const {
  if (eff_map.empty()) throw ConfigError("motor efficiency map missing");
  for (double e : eff_map.values()) {
    if (!(e > 0.0 && e <= 1.0)) throw ConfigError("motor efficiency map values must lie in (0, 1]");
  }
  if (!(tau_max > 0 && p_max > 0 && r_s0 > 0 && xi >= 0 && l_d > 0 && l_q > 0 && lambda_pm > 0 &&
        n_pp > 0 && k_h >= 0 && k_f >= 0)) {
    throw ConfigError("motor parameters must be positive");
  }
  if (!(c_copper > 0 && c_iron > 0 && h_copper > 0 && h_iron > 0 && alpha > 0 && beta > 0)) {
    throw ConfigError("motor thermal parameters must be positive");
  }
  if (std::abs(alpha + beta - 1.0) > 1e-9) throw ConfigError("motor mass fractions must sum to 1");
}

double map_efficiency(const MotorParams& p, double tau, double omega) {
  return p.eff_map(std::abs(tau), omega);
}

ShaftPower shaft_power(const MotorParams& p, double p_batt, double omega) {
  ShaftPower out;
  if (p_batt == 0.0 || omega <= 0.0) return {0.0, 0.0, 1.0};
  // eta depends on the torque it produces; a few fixed-point passes settle it.
  double tau = std::min(std::abs(p_batt / omega), p.tau_max);
  for (int k = 0; k < 20; ++k) {
    out.eta = map_efficiency(p, tau, omega);
    out.p_mot = p_batt > 0.0 ? p_batt * out.eta : p_batt / out.eta;
    const double next = std::min(std::abs(out.p_mot / omega), p.tau_max);
    if (std::abs(next - tau) <= 1e-12 * (1.0 + tau)) {
      tau = next;
      break;
    }
    tau = next;
  }
  out.torque = std::copysign(tau, out.p_mot);
  out.p_mot = out.torque * omega;
  return out;
}

double electrical_power(const MotorParams& p, double tau, double omega) {
  const double p_mech = tau * omega;
  if (p_mech == 0.0) return 0.0;
  const double eta = map_efficiency(p, tau, omega);
  return p_mech > 0.0 ? p_mech / eta : p_mech * eta;
}

double dq_torque(const MotorParams& p, double i_d, double i_q) {
  return 1.5 * p.n_pp * (p.lambda_pm * i_q + (p.l_d - p.l_q) * i_d * i_q);
}

double mtpa_id(const MotorParams& p, double i_q) {
  const double dl = p.l_q - p.l_d;
  const double lam = p.lambda_pm;
  // (lam - sqrt(lam^2 + 4 dl^2 iq^2)) / (2 dl), written without cancellation.
  return -2.0 * dl * i_q * i_q / (lam + std::sqrt(lam * lam + 4.0 * dl * dl * i_q * i_q));
}

DqCurrents mtpa_currents(const MotorParams& p, double tau) {
  if (std::abs(tau) > p.tau_max * (1.0 + 1e-9)) {
    throw std::invalid_argument("torque request " + std::to_string(tau) + " Nm exceeds tau_max");
  }
  if (tau == 0.0) return {};
  const double target = std::abs(tau);
  auto torque_at = [&](double iq) { return dq_torque(p, mtpa_id(p, iq), iq); };

  double lo = 0.0;
  double hi = target / (1.5 * p.n_pp * p.lambda_pm);
  int guard = 0;
  while (torque_at(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 64) throw NumericError("MTPA bracket not found");
  }
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (torque_at(mid) < target) lo = mid;
    else hi = mid;
    if (hi - lo <= 1e-13 * hi) {
      const double iq = 0.5 * (lo + hi);
      const double sign = tau < 0.0 ? -1.0 : 1.0;
      return {mtpa_id(p, iq), sign * iq};
    }
  }
  throw NumericError("MTPA bisection did not converge");
}

MotorLosses motor_losses(const MotorParams& p, const DqCurrents& i, double omega, double T,
                         const ReferenceState& ref) {
  MotorLosses l;
  const double w = std::abs(omega);
  const double r_s = p.r_s0 * (1.0 + p.xi * (T - ref.T0));
  l.copper = r_s * (i.i_d * i.i_d + i.i_q * i.i_q);
  const double psi_d = p.l_d * i.i_d + p.flux_linkage();
  const double psi_q = p.l_q * i.i_q;
  l.iron = p.k_h * w * (psi_d * psi_d + psi_q * psi_q);
  l.fric = p.k_f * w * w;
  return l;
}

MotorStep step_motor(const MotorParams& p, const MotorState& state, double tau, double omega,
                     const ReferenceState& ref, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const double T = state.temperature;
  MotorStep out;
  out.next.currents = mtpa_currents(p, std::clamp(tau, -p.tau_max, p.tau_max));

  auto& x = out.exergy;
  x.losses = motor_losses(p, out.next.currents, omega, T, ref);
  const double q_gen = x.losses.total();
  const double h = p.h_out();
  x.entropy_gen = q_gen / T;
  x.heat = heat_exergy_rate(h * (ref.T0 - T), T, ref);
  x.destruction = -ref.T0 * x.entropy_gen;
  x.total = x.heat + x.destruction;

  out.next.losses = q_gen;
  const double t_ss = ref.T0 + q_gen / h;
  out.next.temperature = t_ss + (T - t_ss) * std::exp(-dt * h / p.heat_capacity());
  return out;
}

}  // namespace exsim
