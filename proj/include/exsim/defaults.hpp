#pragma once

// Synthetic characteristic tables shipped in place of measured data.
// None of these curves is a measurement; they only have plausible shapes.

#include "exsim/tables.hpp"

namespace exsim {

/// NMC-like cell: OCV [V] and R0 [Ohm] on 21 SoC breakpoints.
Curve synthetic_ocv_curve();
Curve synthetic_r0_curve();

/// Efficiency map on (|tau|, omega) built from a loss polynomial in
/// normalised torque and speed, clamped to [0.70, 0.99]. Peak ~0.958.
Grid2D synthetic_motor_map(double tau_max, double p_max, double omega_max);

/// Full-load torque of the default 1.8 l engine [Nm] versus omega [rad/s].
Curve synthetic_engine_torque_curve();

/// Willans-line fuel map (tau, omega) -> g/s; peak brake efficiency ~0.36
/// at LHV = 47.3 MJ/kg.
Grid2D synthetic_fuel_map(double lhv = 47.3e6, double v_d = 1.8e-3);

}  // namespace exsim
