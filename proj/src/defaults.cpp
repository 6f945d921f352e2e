#include "exsim/defaults.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace exsim {

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

}  // namespace

Curve synthetic_ocv_curve() {
  return Curve(linspace(0.0, 1.0, 21),
               {3.000, 3.250, 3.380, 3.460, 3.520, 3.560, 3.590, 3.620, 3.650, 3.680, 3.710,
                3.745, 3.780, 3.820, 3.860, 3.905, 3.950, 4.000, 4.060, 4.120, 4.180});
}

Curve synthetic_r0_curve() {
  return Curve(linspace(0.0, 1.0, 21),
               {0.0400, 0.0320, 0.0280, 0.0255, 0.0240, 0.0230, 0.0222, 0.0216, 0.0212, 0.0208,
                0.0205, 0.0203, 0.0202, 0.0201, 0.0201, 0.0202, 0.0204, 0.0207, 0.0211, 0.0215,
                0.0220});
}

Grid2D synthetic_motor_map(double tau_max, double p_max, double omega_max) {
  const auto taus = linspace(0.0, tau_max, 21);
  const auto omegas = linspace(0.0, omega_max, 33);
  const double omega_base = p_max / tau_max;
  std::vector<double> eta;
  eta.reserve(taus.size() * omegas.size());
  for (double tau : taus) {
    for (double w : omegas) {
      const double tn = tau / tau_max;
      const double wn = w / omega_base;
      const double p = tau * w;
      const double loss = p_max * (0.003 + 0.045 * tn * tn + 0.008 * wn + 0.004 * wn * wn);
      const double e = p > 0.0 ? p / (p + loss) : 0.0;
      eta.push_back(std::clamp(e, 0.70, 0.99));
    }
  }
  return Grid2D(taus, omegas, eta);
}

Curve synthetic_engine_torque_curve() {
  return Curve({50.0, 80.0, 150.0, 250.0, 377.0, 450.0, 545.0, 620.0},
               {88.0, 100.0, 122.0, 136.0, 142.0, 140.0, 134.0, 115.0});
}

Grid2D synthetic_fuel_map(double lhv, double v_d) {
  const auto taus = linspace(0.0, 150.0, 31);
  const auto omegas = linspace(40.0, 620.0, 30);
  std::vector<double> g;
  g.reserve(taus.size() * omegas.size());
  for (double tau : taus) {
    for (double w : omegas) {
      // Indicated efficiency and the zero-load intercept (friction + pumping).
      const double e = 0.425 * (1.0 - 0.12 * std::pow((w - 300.0) / 320.0, 2));
      const double mep0 = 1.45e5 + 60.0 * w + 0.05 * w * w;
      const double p0 = mep0 * v_d * w / (4.0 * std::numbers::pi);
      g.push_back(1e3 * (tau * w + p0) / e / lhv);
    }
  }
  return Grid2D(taus, omegas, g);
}

}  // namespace exsim
