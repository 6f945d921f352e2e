#include "exsim/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "exsim/error.hpp"

namespace exsim {

void EngineParams::validate(const ReferenceState& ref) const {
  if (fuel_map.empty()) throw ConfigError("engine fuel map missing");
  for (double v : fuel_map.values()) {
    if (v < 0.0) throw ConfigError("engine fuel map must be non-negative");
  }
  if (max_torque.empty()) throw ConfigError("engine torque curve missing");
  if (x <= 0 || y <= 0) throw ConfigError("fuel formula needs x, y > 0");
  if (!(b > 0.0 && b < 1.0)) throw ConfigError("Taylor & Toong exponent must lie in (0, 1)");
  if (!(t_eng > t_c && t_c > ref.T0)) throw ConfigError("engine temperatures must satisfy T_eng > T_c > T0");
  if (!(t_exh >= ref.T0)) throw ConfigError("exhaust temperature below T0");
  if (!(lhv > 0 && afr_stoich > 0 && v_tank >= 0 && rho_fuel > 0 && bore > 0 && v_d > 0 && k_g > 0 &&
        mu_g > 0 && a > 0)) {
    throw ConfigError("engine parameters must be positive");
  }
  if (fmep_c0 < 0 || fmep_c1 < 0 || fmep_c2 < 0) throw ConfigError("FMEP coefficients must be non-negative");
  if (!(omega_max > omega_min && omega_min > 0)) throw ConfigError("engine speed window is invalid");
}

double EngineParams::torque_limit(double omega) const {
  if (!can_run(omega)) return 0.0;
  return max_torque(omega);
}

CombustionStoich stoichiometry(int x, int y) {
  if (x <= 0 || y <= 0) throw std::invalid_argument("fuel formula needs x, y > 0");
  CombustionStoich s;
  s.a = x;
  s.b = y / 2.0;
  s.z = s.a + s.b / 2.0;
  s.c = 3.76 * s.z;
  s.n_tot = s.a + s.b + s.c;
  s.fractions[static_cast<std::size_t>(Species::CO2)] = s.a / s.n_tot;
  s.fractions[static_cast<std::size_t>(Species::H2O)] = s.b / s.n_tot;
  s.fractions[static_cast<std::size_t>(Species::N2)] = s.c / s.n_tot;
  s.fractions[static_cast<std::size_t>(Species::O2)] = 0.0;
  for (Species k : kAllSpecies) s.molar_mass += s.fraction(k) * molar_mass(k);
  return s;
}

double fuel_availability_factor(int x, int y) {
  return 1.04224 + 0.011925 * static_cast<double>(x) / y - 0.0042 / x;
}

double specific_fuel_exergy(const EngineParams& p) { return fuel_availability_factor(p.x, p.y) * p.lhv; }

double fuel_exergy_rate(const EngineParams& p, double mdot_fuel) {
  return specific_fuel_exergy(p) * mdot_fuel;
}

double max_fuel_exergy(const EngineParams& p) { return p.v_tank * p.rho_fuel * specific_fuel_exergy(p); }

double exhaust_molar_flow(const EngineParams& p, const CombustionStoich& st, double mdot_fuel) {
  const double mdot_exh = mdot_fuel * (1.0 + p.afr_stoich);
  return mdot_exh / st.molar_mass;
}

double exhaust_exergy_rate(const EngineParams& p, const CombustionStoich& st, double mdot_fuel,
                           const ReferenceState& ref, const ThermoTable& table) {
  if (mdot_fuel == 0.0) return 0.0;
  const double n_exh = exhaust_molar_flow(p, st, mdot_fuel);
  double x = 0.0;
  for (Species k : kAllSpecies) {
    const double f = st.fraction(k);
    if (f == 0.0) continue;
    x += n_exh * f * (chemical_exergy(k, f, ref) + physical_exergy(table, k, p.t_exh, ref));
  }
  return -x;
}

double engine_heat_flow(const EngineParams& p, double mdot_fuel) {
  if (mdot_fuel <= 0.0) return 0.0;
  const double mdot = mdot_fuel * (1.0 + p.afr_stoich);
  const double area = std::numbers::pi * p.bore * p.bore / 4.0;
  return p.a * p.k_g / std::pow(p.mu_g, p.b) * std::pow(mdot, p.b) * std::pow(p.bore, p.b - 1.0) *
         std::pow(area, 1.0 - p.b) * (p.t_eng - p.t_c);
}

double engine_heat_exergy_rate(const EngineParams& p, double mdot_fuel, const ReferenceState& ref) {
  return -carnot_factor(p.t_eng, ref) * engine_heat_flow(p, mdot_fuel);
}

double friction_power(const EngineParams& p, double omega) {
  if (omega <= 0.0) return 0.0;
  const double fmep = p.fmep_c0 + p.fmep_c1 * omega + p.fmep_c2 * omega * omega;
  return fmep * p.v_d * omega / (4.0 * std::numbers::pi);
}

double friction_exergy_rate(const EngineParams& p, double omega) { return -friction_power(p, omega); }

double fuel_rate(const EngineParams& p, double tau, double omega) {
  if (tau <= 0.0) return 0.0;
  return 1e-3 * p.fuel_map(tau, omega);
}

double combustion_irreversibility(double fuel, double work, double exhaust, double heat, double friction) {
  return -fuel - work - exhaust - heat - friction;
}

EngineExergy engine_exergy(const EngineParams& p, const CombustionStoich& st, double tau, double omega,
                           const ReferenceState& ref, const ThermoTable& table) {
  EngineExergy e;
  if (tau <= 0.0) return e;
  e.mdot_fuel = fuel_rate(p, tau, omega);
  e.fuel = fuel_exergy_rate(p, e.mdot_fuel);
  e.work = -tau * omega;
  e.exhaust = exhaust_exergy_rate(p, st, e.mdot_fuel, ref, table);
  e.heat = engine_heat_exergy_rate(p, e.mdot_fuel, ref);
  e.friction = friction_exergy_rate(p, omega);
  e.combustion = combustion_irreversibility(e.fuel, e.work, e.exhaust, e.heat, e.friction);
  e.consistent = e.combustion <= 0.0;
  return e;
}

double heat_fuel_ratio(const EngineParams& p, const std::vector<FuelSample>& samples,
                       const ReferenceState& ref) {
  double heat = 0.0;
  double fuel = 0.0;
  for (const auto& s : samples) {
    heat += s.dt * engine_heat_exergy_rate(p, s.mdot_fuel, ref);
    fuel += s.dt * fuel_exergy_rate(p, s.mdot_fuel);
  }
  if (!(fuel > 0.0)) throw CalibrationError("no fuel consumed: heat-to-fuel ratio undefined");
  return -heat / fuel;
}

double calibrate_a(const EngineParams& p, const std::vector<FuelSample>& samples, const ReferenceState& ref,
                   double target, double a_lo, double a_hi) {
  if (!(a_hi > a_lo && a_lo > 0.0)) throw std::invalid_argument("invalid calibration bracket");
  EngineParams q = p;
  auto residual = [&](double a) {
    q.a = a;
    return heat_fuel_ratio(q, samples, ref) - target;
  };
  double r_lo = residual(a_lo);
  const double r_hi = residual(a_hi);
  if (r_lo > 0.0 || r_hi < 0.0) {
    throw CalibrationError("heat-to-fuel target " + std::to_string(target) + " not bracketed by a in [" +
                           std::to_string(a_lo) + ", " + std::to_string(a_hi) + "]");
  }
  double lo = a_lo, hi = a_hi;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double r = residual(mid);
    if (r < 0.0) lo = mid;
    else hi = mid;
    if (hi - lo <= 1e-12 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace exsim
