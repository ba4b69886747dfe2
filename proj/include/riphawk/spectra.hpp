#pragma once

#include <cmath>
#include <vector>

#include "riphawk/bogoliubov.hpp"
#include "riphawk/constants.hpp"
#include "riphawk/dispersion.hpp"
#include "riphawk/errors.hpp"
#include "riphawk/greybody.hpp"
#include "riphawk/horizon.hpp"
#include "riphawk/kinematics.hpp"

namespace riphawk {

// Planck spectral energy density per unit angular frequency in a dispersive
// medium (thermal-bath frame),
//   rho = (hbar omega^3 / pi^2 c^2) (n^2/v_g) / (exp(hbar omega/k_b T) - 1).
inline double planck_density_dispersive(double omega, double T,
                                        const MaterialModel& material) {
  if (!(T > 0.0))
    throw domain_error("planck_density_dispersive: T must be positive");
  const double n = material.index(omega);
  const double vg = material.group_velocity(omega);  // throws if anomalous
  const double x = hbar * omega / (k_boltzmann * T);
  return (hbar * omega * omega * omega / (pi * pi * c_light * c_light)) *
         (n * n / vg) / std::expm1(x);
}

// One assembled spectrum sample.
struct SpectrumRow {
  double omega_l;        // [rad/s]
  double theta;          // [rad]
  double T_lab;          // [K]
  double greybody;       // transmission factor
  double occupation;     // <N> = greybody/(e^{hbar omega/k T_lab} - 1)
  bool in_phase_window;  // emitted only here (default gating)
  bool in_group_window;
  double rho;            // dispersive Planck density [J s / m^3]
};

// Windowed, greybody-weighted emission spectrum at fixed angle.  Occupation
// numbers are computed for every grid frequency; the window flags mark which
// rows the dispersive horizon condition actually excites.
inline std::vector<SpectrumRow> emission_spectrum(
    const RipProfile& profile, const FrameKinematics& kin,
    const MaterialModel& material, double theta,
    const std::vector<double>& omega_grid) {
  const HorizonReport rep = find_horizons(profile, kin);
  const double T_lab = temperature_lab(rep.T_pulse, theta, kin, profile.n0());
  const SpectralWindow phase_w = phase_window_lab(material, profile.eta(), kin);
  const SpectralWindow group_w = group_window_lab(material, profile.eta(), kin);

  std::vector<SpectrumRow> rows;
  rows.reserve(omega_grid.size());
  for (double w : omega_grid) {
    SpectrumRow row;
    row.omega_l = w;
    row.theta = theta;
    row.T_lab = T_lab;
    const double k_perp = profile.n0() * w / c_light * std::sin(theta);
    row.greybody = greybody_lab(w, theta, k_perp, kin, profile.n0());
    row.occupation = occupation(w, T_lab, row.greybody);
    row.in_phase_window = phase_w.contains(w);
    row.in_group_window = group_w.contains(w);
    row.rho = planck_density_dispersive(w, T_lab, material);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace riphawk
