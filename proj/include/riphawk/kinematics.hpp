#pragma once

#include <cmath>

#include "riphawk/constants.hpp"
#include "riphawk/errors.hpp"

namespace riphawk {

// Lorentz factor for 0 <= v < c.
inline double lorentz_gamma(double v) {
  if (!(v >= 0.0) || v >= c_light)
    throw domain_error("lorentz_gamma: need 0 <= v < c");
  const double beta = v / c_light;
  return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

// Boost between lab frame and the frame comoving with the index perturbation.
// gamma is derived from v on construction and never stored independently.
struct FrameKinematics {
  double v;      // pulse speed [m/s]
  double gamma;  // Lorentz factor

  static FrameKinematics from_speed(double v) {
    return FrameKinematics{v, lorentz_gamma(v)};
  }

  // Convenience for the common parametrization v = c / (c/v).
  static FrameKinematics from_c_over_v(double c_over_v) {
    if (!(c_over_v > 1.0))
      throw domain_error("FrameKinematics: need c/v > 1 (subluminal pulse)");
    return from_speed(c_light / c_over_v);
  }

  double beta() const { return v / c_light; }
  double c_over_v() const { return c_light / v; }
};

// Relativistic Doppler formula in a medium of index n0: pulse-frame frequency
// of a lab photon of frequency omega_l emitted at angle theta from the pulse
// direction of motion.
inline double doppler_to_comoving(double omega_l, double theta,
                                  const FrameKinematics& kin, double n0) {
  if (!(omega_l >= 0.0))
    throw domain_error("doppler_to_comoving: omega_l must be >= 0");
  if (!(theta >= 0.0 && theta <= pi))
    throw domain_error("doppler_to_comoving: theta must lie in [0, pi]");
  return omega_l * kin.gamma * (1.0 - kin.beta() * n0 * std::cos(theta));
}

enum class BoostDirection { lab_to_pulse, pulse_to_lab };

struct WaveComponents {
  double omega;  // [rad/s]
  double k_x;    // [rad/m]
};

// Boost of a wave (omega, k_x):
//   omega_l = gamma (omega + v k_x),  k_xl = gamma (k_x + v omega / c^2)
// and the algebraic inverse.  Round trip is the identity.
inline WaveComponents boost_wave(double omega, double k_x,
                                 const FrameKinematics& kin,
                                 BoostDirection dir) {
  const double g = kin.gamma, v = kin.v;
  if (dir == BoostDirection::pulse_to_lab)
    return {g * (omega + v * k_x), g * (k_x + v * omega / (c_light * c_light))};
  return {g * (omega - v * k_x), g * (k_x - v * omega / (c_light * c_light))};
}

// Angular frequency of maximum blackbody emission from Wien's displacement
// law, omega = 2 pi c T / b.
inline double wien_peak(double T) {
  if (!(T > 0.0)) throw domain_error("wien_peak: T must be positive");
  return 2.0 * pi * c_light * T / wien_b;
}

}  // namespace riphawk
