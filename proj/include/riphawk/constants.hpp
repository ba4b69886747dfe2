#pragma once

namespace riphawk {

// CODATA 2018 values; c and k_b are exact by definition.
inline constexpr double c_light = 2.99792458e8;      // vacuum light speed [m/s]
inline constexpr double hbar = 1.054571817e-34;      // reduced Planck constant [J s]
inline constexpr double k_boltzmann = 1.380649e-23;  // Boltzmann constant [J/K]

// Wien displacement constant, the rounded optics-textbook value (lambda_max T = b).
inline constexpr double wien_b = 2.9e-3;             // [m K]

inline constexpr double pi = 3.14159265358979323846;

}  // namespace riphawk
