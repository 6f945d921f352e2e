#include "exsim/vehicle.hpp"

#include <algorithm>
#include <stdexcept>

#include "exsim/error.hpp"

namespace exsim {

void ChassisParams::validate() const {
  if (!(mass > 0 && frontal_area > 0 && drag_coeff > 0 && roll_coeff > 0 && wheel_radius > 0 &&
        air_density > 0 && gravity > 0)) {
    throw ConfigError("chassis parameters must be positive");
  }
  if (!(drag_coeff < 1.0)) throw ConfigError("drag coefficient must be below 1");
  if (!(roll_coeff < 0.1)) throw ConfigError("rolling coefficient must be below 0.1");
  if (!(diff_efficiency > 0.0 && diff_efficiency <= 1.0)) {
    throw ConfigError("differential efficiency must lie in (0, 1]");
  }
}

ResistiveForces resistive_forces(double v, const ChassisParams& p) {
  ResistiveForces f;
  f.aero = 0.5 * p.frontal_area * p.air_density * p.drag_coeff * v * v;
  f.roll = v > 0.0 ? p.mass * p.gravity * p.roll_coeff : 0.0;
  return f;
}

double predict_speed(double v, double net_force, const ChassisParams& p, double dt) {
  return v + dt * net_force / p.mass;
}

LongitudinalStep step_longitudinal(const LongitudinalState& state, double f_trac, double f_brake,
                                   const ChassisParams& p, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (f_brake < 0.0) throw std::invalid_argument("brake force must be non-negative");

  const auto res = resistive_forces(state.v, p);
  LongitudinalStep s;
  s.f_trac = f_trac;
  s.f_brake = f_brake;
  s.f_roll = res.roll;
  s.f_aero = res.aero;

  double v_next = predict_speed(state.v, f_trac - f_brake - res.roll - res.aero, p, dt);
  if (v_next < 0.0) {
    // Retarding forces are reactions: they can stop the vehicle, not reverse it.
    double excess = -v_next * p.mass / dt;
    const double cut_brake = std::min(excess, s.f_brake);
    s.f_brake -= cut_brake;
    excess -= cut_brake;
    if (s.f_trac < 0.0) {
      const double cut = std::min(excess, -s.f_trac);
      s.f_trac += cut;
      excess -= cut;
    }
    const double cut_roll = std::min(excess, s.f_roll);
    s.f_roll -= cut_roll;
    excess -= cut_roll;
    s.f_aero -= std::min(excess, s.f_aero);
    v_next = 0.0;
    s.stopped = true;
  }

  s.v_eval = 0.5 * (state.v + v_next);
  s.next.v = v_next;
  s.next.x = state.x + dt * s.v_eval;

  s.power.trac = s.f_trac * s.v_eval;
  s.power.brake = s.f_brake * s.v_eval;
  s.power.roll = s.f_roll * s.v_eval;
  s.power.aero = s.f_aero * s.v_eval;
  s.power.longitudinal = p.mass * (v_next - state.v) / dt * s.v_eval;
  return s;
}

double hamiltonian_rate(const PowerTerms& p) { return p.trac - p.brake - p.roll - p.aero; }

}  // namespace exsim
