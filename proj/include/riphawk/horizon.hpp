#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "riphawk/constants.hpp"
#include "riphawk/errors.hpp"
#include "riphawk/kinematics.hpp"
#include "riphawk/numerics/roots.hpp"
#include "riphawk/rip_profile.hpp"

namespace riphawk {

// Pulse-frame metric sampled at one point.  Conventions:
//   ds^2 = g00 dt^2 + 2 g01 dt dx + g11 dx^2 - dy^2 - dz^2,
// and after the shift dt = dtau - alpha dx the static form
//   ds^2 = (c^2/n^2) g_tautau dtau^2 - dx^2/g_tautau - dy^2 - dz^2.
struct MetricSample {
  double x;
  double g00;       // [m^2/s^2]
  double g01;       // [m/s]
  double g11;       // dimensionless
  double g_tautau;  // static lapse factor, gamma^2 (1 + n v/c)(1 - n v/c)
  double alpha;     // dt shift g01/g00 [s/m]; +-inf exactly on a horizon
};

inline double lapse_g_tautau(const RipProfile& profile,
                             const FrameKinematics& kin, double x) {
  const double nvc = profile.refractive_index(x) * kin.beta();
  return kin.gamma * kin.gamma * (1.0 + nvc) * (1.0 - nvc);
}

inline MetricSample metric_components(const RipProfile& profile,
                                      const FrameKinematics& kin, double x) {
  const double n = profile.refractive_index(x);
  const double g2 = kin.gamma * kin.gamma;
  const double nvc = n * kin.beta();
  MetricSample m;
  m.x = x;
  m.g_tautau = g2 * (1.0 + nvc) * (1.0 - nvc);
  m.g00 = g2 * (c_light * c_light / (n * n)) * (1.0 + nvc) * (1.0 - nvc);
  m.g01 = g2 * (kin.v / (n * n)) * (1.0 - n * n);
  m.g11 = -g2 * (1.0 + kin.v / (n * c_light)) * (1.0 - kin.v / (n * c_light));
  m.alpha = (m.g00 != 0.0)
                ? m.g01 / m.g00
                : std::copysign(std::numeric_limits<double>::infinity(), m.g01);
  return m;
}

// Existence gate for the two horizons: 1/(n0+eta) <= v/c < 1/n0.
inline bool horizon_exists(const RipProfile& profile,
                           const FrameKinematics& kin) {
  const double beta = kin.beta();
  return beta >= 1.0 / (profile.n0() + profile.eta()) &&
         beta < 1.0 / profile.n0();
}

// Black-hole (x_plus) and white-hole (x_minus) horizons of 1 - n(x) v/c = 0,
// surface gravity and the pulse-frame temperature.
struct HorizonReport {
  double x_plus;       // leading (falling-edge) root [m]
  double x_minus;      // trailing (rising-edge) root [m]
  double u_plus;       // x_plus / gamma [m]
  double u_minus;      // x_minus / gamma [m]
  double kappa_plus;   // surface gravity [m/s^2]
  double T_pulse;      // [K]
  double k_level;      // intensity at x_plus, in (0, 1)
  std::vector<double> inner_roots;  // further roots between the outer pair
};

enum class HorizonMethod { automatic, closed_form, scan };

namespace detail {

// Grid-scan + bisection root finder used for every non-Gaussian shape (and as
// the Gaussian cross-check).  Tolerance |1 - n v/c| < 1e-14.
inline std::vector<double> horizon_roots_scan(const RipProfile& profile,
                                              const FrameKinematics& kin,
                                              int grid_points = 10000) {
  const auto [lo, hi] = profile.support();
  auto f = [&](double x) { return 1.0 - profile.refractive_index(x) * kin.beta(); };
  auto brackets = num::scan_brackets(f, lo, hi, grid_points);
  if (brackets.empty()) {
    // A nearly tangent pair can slip between grid nodes; refine around the peak.
    const double xc = profile.center();
    const double w = (hi - lo) / (grid_points - 1.0);
    brackets = num::scan_brackets(f, xc - 2.0 * w, xc + 2.0 * w, 4096);
  }
  std::vector<double> roots;
  roots.reserve(brackets.size());
  for (auto [a, b] : brackets) {
    if (a == b) {
      roots.push_back(a);
      continue;
    }
    // Run the bracket down to machine resolution; |1 - n v/c| ends far below
    // the 1e-14 requirement and the root matches closed forms to ~ulp(x).
    roots.push_back(num::bisect(f, a, b, 0.0, 0.0));
  }
  return roots;
}

}  // namespace detail

inline HorizonReport find_horizons(const RipProfile& profile,
                                   const FrameKinematics& kin,
                                   HorizonMethod method = HorizonMethod::automatic);

// kappa = gamma^2 v^2 |dn/dx(x_h)|  (Killing-vector form).
inline double surface_gravity(const RipProfile& profile,
                              const FrameKinematics& kin, double x_h) {
  return kin.gamma * kin.gamma * kin.v * kin.v * std::abs(profile.dn_dx(x_h));
}

// Same quantity through c^2 |dn/dx| / ((n0 + k eta)^2 - 1) with k = I(x_h).
inline double surface_gravity_k_form(const RipProfile& profile, double x_h) {
  const double n_h = profile.n0() + profile.intensity(x_h) * profile.eta();
  return c_light * c_light * std::abs(profile.dn_dx(x_h)) / (n_h * n_h - 1.0);
}

// T = hbar kappa / (2 pi k_b c).
inline double temperature_pulse(double kappa) {
  if (!(kappa >= 0.0)) throw domain_error("temperature_pulse: kappa must be >= 0");
  return hbar * kappa / (2.0 * pi * k_boltzmann * c_light);
}

// Lab-frame temperature seen at emission angle theta.
inline double temperature_lab(double T_pulse, double theta,
                              const FrameKinematics& kin, double n0) {
  if (!(T_pulse >= 0.0)) throw domain_error("temperature_lab: T_pulse must be >= 0");
  const double d = 1.0 - kin.beta() * n0 * std::cos(theta);
  if (!(d > 0.0))
    throw domain_error(
        "temperature_lab: (v/c) n0 cos(theta) >= 1 (superluminal-phase sector)");
  return T_pulse / (kin.gamma * d);
}

// Map of the pulse-frame metric onto an acoustic-black-hole form:
// ctilde = c, vtilde = gamma^2 v (n^2-1)/n, conformal factor Omega^2 and the
// coordinate stretch dxtilde/dx.
struct AcousticSample {
  double v_tilde;      // effective flow speed [m/s]
  double c_tilde;      // effective sound speed (= c) [m/s]
  double Omega2;       // conformal factor
  double dxtilde_dx;   // coordinate stretch (negative)
};

inline AcousticSample acoustic_map(const RipProfile& profile,
                                   const FrameKinematics& kin, double x) {
  const double n = profile.refractive_index(x);
  const double g2 = kin.gamma * kin.gamma;
  const double beta2 = kin.beta() * kin.beta();
  AcousticSample a;
  a.c_tilde = c_light;
  a.v_tilde = g2 * kin.v * (n * n - 1.0) / n;
  a.Omega2 = 1.0 / (g2 * (n * n - beta2));
  a.dxtilde_dx = -g2 * (n * n - beta2) / n;
  return a;
}

// kappa from the acoustic form ctilde | d(ctilde - vtilde)/dxtilde | at x_plus.
inline double surface_gravity_acoustic(const RipProfile& profile,
                                       const FrameKinematics& kin) {
  const HorizonReport rep = find_horizons(profile, kin);
  const double x = rep.x_plus;
  const double n = profile.refractive_index(x);
  const double np = profile.dn_dx(x);
  const double g2 = kin.gamma * kin.gamma;
  const double dvtilde_dx = g2 * kin.v * (1.0 + 1.0 / (n * n)) * np;
  const double dxtilde_dx =
      -g2 * (n * n - kin.beta() * kin.beta()) / n;
  return c_light * std::abs(dvtilde_dx) / std::abs(dxtilde_dx);
}

// Euclidean period removing the conical singularity at x_plus,
// beta = 2 pi (c^2/v^2)(1/gamma^2) / |dn/dx(x_plus)|; the associated
// temperature hbar c / (k_b beta) reproduces temperature_pulse.  beta depends
// only on v, gamma and dn/dx(x_plus), so any static conformal factor that is
// finite and nonzero at the horizon leaves it unchanged.
inline double euclidean_period(const RipProfile& profile,
                               const FrameKinematics& kin) {
  const HorizonReport rep = find_horizons(profile, kin);
  const double slope = std::abs(profile.dn_dx(rep.x_plus));
  if (!(slope > 0.0))
    throw tangent_horizon_error("euclidean_period: tangent horizon, infinite period",
                                rep.x_plus);
  return 2.0 * pi * (c_light * c_light) / (kin.v * kin.v) /
         (kin.gamma * kin.gamma) / slope;
}

inline HorizonReport find_horizons(const RipProfile& profile,
                                   const FrameKinematics& kin,
                                   HorizonMethod method) {
  if (!horizon_exists(profile, kin))
    throw no_horizon_error("no horizon: c/v exceeds n0+eta");

  const double c_over_v = kin.c_over_v();
  const double level = (c_over_v - profile.n0()) / profile.eta();  // target intensity
  if (level >= 1.0) {
    // v/c = 1/(n0+eta): the root is the degenerate tangency at the peak.
    throw tangent_horizon_error("tangent horizon: c/v equals n0+eta",
                                profile.center());
  }

  std::vector<double> roots;
  const bool use_closed_form =
      method == HorizonMethod::closed_form ||
      (method == HorizonMethod::automatic &&
       profile.kind() == RipProfile::Kind::gaussian);
  if (use_closed_form) {
    const double sigma = profile.gauss().sigma;
    const double xp = sigma * std::sqrt(-2.0 * std::log(level));
    roots = {-xp, xp};
  } else {
    roots = detail::horizon_roots_scan(profile, kin);
  }
  if (roots.empty())
    throw tangent_horizon_error(
        "tangent horizon: no transversal root resolved near the peak",
        profile.center());

  // Outermost falling-edge root is the black-hole horizon, outermost
  // rising-edge root the white-hole horizon.
  std::optional<double> x_plus, x_minus;
  std::vector<double> inner;
  for (double r : roots) {
    if (profile.dn_dx(r) < 0.0) {
      if (!x_plus || r > *x_plus) x_plus = r;
    } else if (profile.dn_dx(r) > 0.0) {
      if (!x_minus || r < *x_minus) x_minus = r;
    }
  }
  if (!x_plus || !x_minus)
    throw tangent_horizon_error(
        "tangent horizon: missing a transversal falling/rising root pair",
        profile.center());
  for (double r : roots)
    if (r != *x_plus && r != *x_minus) inner.push_back(r);

  HorizonReport rep;
  rep.x_plus = *x_plus;
  rep.x_minus = *x_minus;
  rep.u_plus = rep.x_plus / kin.gamma;
  rep.u_minus = rep.x_minus / kin.gamma;
  rep.kappa_plus = surface_gravity(profile, kin, rep.x_plus);
  rep.T_pulse = temperature_pulse(rep.kappa_plus);
  rep.k_level = profile.intensity(rep.x_plus);
  rep.inner_roots = std::move(inner);
  return rep;
}

}  // namespace riphawk
