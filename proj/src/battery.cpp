#include "exsim/battery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "exsim/error.hpp"

namespace exsim {

void CellParams::validate() const {
  if (ocv.empty() || r0.empty()) throw ConfigError("cell OCV/R0 curves missing");
  if (ocv.x().front() > 0.0 || ocv.x().back() < 1.0 || r0.x().front() > 0.0 || r0.x().back() < 1.0) {
    throw ConfigError("cell OCV/R0 curves must cover SoC in [0, 1]");
  }
  for (double v : ocv.y()) {
    if (!(v > 0.0)) throw ConfigError("cell OCV must be positive");
  }
  for (double r : r0.y()) {
    if (!(r > 0.0)) throw ConfigError("cell R0 must be positive");
  }
  if (!(q_nom > 0.0 && v_nom > 0.0)) throw ConfigError("cell nominal capacity/voltage must be positive");
  if (!(heat_capacity > 0.0 && h_out > 0.0)) throw ConfigError("cell thermal parameters must be positive");
  if (!(v_min > 0.0 && v_max > v_min)) throw ConfigError("cell voltage window is invalid");
}

double PackParams::v_oc(double soc) const { return n_series * cell.ocv(soc); }

double PackParams::r0(double soc) const {
  return static_cast<double>(n_series) / n_parallel * cell.r0(soc);
}

PackParams upscale(const CellParams& cell, int n_series, int n_parallel) {
  if (n_series < 1 || n_parallel < 1) throw std::invalid_argument("pack needs at least one cell");
  PackParams p;
  p.cell = cell;
  p.n_series = n_series;
  p.n_parallel = n_parallel;
  p.v_nom = n_series * cell.v_nom;
  p.q_nom = n_parallel * cell.q_nom;
  p.e_nom = p.v_nom * p.q_nom * 3600.0;
  p.heat_capacity = n_series * n_parallel * cell.heat_capacity;
  p.h_out = n_series * n_parallel * cell.h_out;
  return p;
}

CurrentSolution solve_current(const PackParams& pack, double soc, double p_batt) {
  const double voc = pack.v_oc(soc);
  const double r = pack.r0(soc);
  if (p_batt == 0.0) return {0.0, voc};
  const double disc = voc * voc - 4.0 * r * p_batt;
  if (disc < 0.0) {
    throw PowerLimitError("battery power " + std::to_string(p_batt) + " W exceeds pack capability " +
                          std::to_string(voc * voc / (4.0 * r)) + " W");
  }
  // Rationalised form of (voc - sqrt(disc)) / (2 r); no cancellation at small P.
  const double i = 2.0 * p_batt / (voc + std::sqrt(disc));
  return {i, voc - r * i};
}

PowerWindow power_limits(const PackParams& pack, double soc) {
  const double voc_cell = pack.cell.ocv(soc);
  const double r_cell = pack.cell.r0(soc);
  const double cells = static_cast<double>(pack.n_series) * pack.n_parallel;
  PowerWindow w;
  const double v_lo = std::max(pack.cell.v_min, 0.5 * voc_cell);
  if (voc_cell > v_lo) w.discharge = cells * v_lo * (voc_cell - v_lo) / r_cell;
  if (pack.cell.v_max > voc_cell) w.charge = cells * pack.cell.v_max * (pack.cell.v_max - voc_cell) / r_cell;
  return w;
}

BatteryStep step_battery(const PackParams& pack, const BatteryState& state, double p_batt,
                         const ReferenceState& ref, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const auto sol = solve_current(pack, state.soc, p_batt);
  const double r = pack.r0(state.soc);
  const double T = state.temperature;

  BatteryStep out;
  auto& x = out.exergy;
  x.joule = r * sol.current * sol.current;
  x.entropy_gen = x.joule / T;
  x.heat = heat_exergy_rate(pack.h_out * (ref.T0 - T), T, ref);
  x.work = -p_batt;
  x.destruction = -ref.T0 * x.entropy_gen;
  x.total = x.heat + x.work + x.destruction;

  auto& n = out.next;
  n.current = sol.current;
  n.voltage = sol.voltage;
  n.soc = state.soc - dt * sol.current / (3600.0 * pack.q_nom);
  n.soe = state.soe - dt * p_batt / pack.e_nom;
  if (n.soc < 0.0 || n.soc > 1.0) {
    throw ChargeLimitError("battery SoC would reach " + std::to_string(n.soc) +
                           (n.soc < 0.0 ? " (depleted)" : " (overcharged)"));
  }
  const double t_ss = ref.T0 + x.joule / pack.h_out;
  n.temperature = t_ss + (T - t_ss) * std::exp(-dt * pack.h_out / pack.heat_capacity);
  return out;
}

double initial_exergy(const PackParams& pack, double soc0) {
  if (soc0 < 0.0 || soc0 > 1.0) throw std::invalid_argument("initial SoC outside [0, 1]");
  return soc0 * pack.e_nom;
}

}  // namespace exsim
