#pragma once

#include <algorithm>
#include <cmath>

#include "exsim/config.hpp"

namespace exsim::test {

// Cost of one split evaluated from the tables, independently of the
// candidate generator.
struct OracleChoice {
  double u = 0;
  double cost = 0;
  double p_batt = 0;
  bool found = false;
};

inline OracleChoice ecms_oracle(double force, double v, double soc, const SimConfig& c) {
  const auto pack = c.pack();
  const auto w = power_limits(pack, soc);
  const double wm = v / c.chassis.wheel_radius * c.motor_ratio;
  const double we = v / c.chassis.wheel_radius * c.engine_ratio;
  const double tw = force * c.chassis.wheel_radius / c.chassis.diff_efficiency;
  OracleChoice best;
  const int n = c.ecms.candidates;
  for (int k = 0; k < n; ++k) {
    const double u = -1.0 + 2.0 * k / (n - 1);
    const double tm = u * tw / c.motor_ratio;
    const double te = k == n - 1 ? 0.0 : (1 - u) * tw / c.engine_ratio;
    if (std::abs(tm) > std::min(c.motor.tau_max, wm > 0 ? c.motor.p_max / wm : c.motor.tau_max)) continue;
    const bool runs = we >= c.engine.omega_min && we <= c.engine.omega_max;
    if (te > (runs ? c.engine.max_torque(we) : 0.0)) continue;
    double p = 0;
    if (tm * wm != 0) {
      const double eta = c.motor.eff_map(std::abs(tm), wm);
      p = tm * wm > 0 ? tm * wm / eta : tm * wm * eta;
    }
    if (p > w.discharge || p < -w.charge) continue;
    const double mdot = te > 0 ? 1e-3 * c.engine.fuel_map(te, we) : 0.0;
    const double s = std::max(0.0, (p > 0 ? c.ecms.s_discharge : c.ecms.s_charge) *
                                       (1 + c.ecms.k_soc * (c.ecms.soc_ref - soc)));
    const double j = mdot + s * p / c.engine.lhv;
    if (!best.found || j < best.cost || (j == best.cost && std::abs(p) < std::abs(best.p_batt))) {
      best = {u, j, p, true};
    }
  }
  return best;
}

}  // namespace exsim::test
