#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "riphawk/constants.hpp"
#include "riphawk/errors.hpp"
#include "riphawk/horizon.hpp"
#include "riphawk/kinematics.hpp"
#include "riphawk/numerics/quadrature.hpp"
#include "riphawk/numerics/roots.hpp"
#include "riphawk/rip_profile.hpp"

namespace riphawk {

using cplx = std::complex<double>;

// Tortoise coordinate s = int n/(c g_tautau) dx with s(x_ref) = 0, defined on
// the exterior (x_plus, inf).  s -> -inf logarithmically at the horizon.
// Units are seconds, matching the (rad/s)^2 potential below.
inline double tortoise(const RipProfile& profile, const FrameKinematics& kin,
                       double x, double x_ref) {
  if (horizon_exists(profile, kin)) {
    const HorizonReport rep = find_horizons(profile, kin);
    if (std::min(x, x_ref) <= rep.x_plus)
      throw domain_error("tortoise: interval touches the horizon (divergent)");
  }
  auto integrand = [&](double xx) {
    return profile.refractive_index(xx) /
           (c_light * lapse_g_tautau(profile, kin, xx));
  };
  return num::integrate<double>(integrand, x_ref, x, 1e-10).value;
}

// One transverse scattering channel.  The effective potential is expressed in
// the boosted tortoise frame (s scaled by gamma), which makes its asymptote
// exactly Q_inf = k_perp^2 q0^2 with q0 = (c/n0) sqrt(1 - n0^2 v^2/c^2).
struct ScatteringProblem {
  RipProfile profile;
  FrameKinematics kin;
  double k_perp;  // [rad/m]
  double q0;      // [m/s]
  double Q_inf;   // [rad^2/s^2]
  double x_plus;  // black-hole horizon [m]
};

inline ScatteringProblem make_scattering_problem(const RipProfile& profile,
                                                 const FrameKinematics& kin,
                                                 double k_perp) {
  if (!(k_perp >= 0.0))
    throw domain_error("ScatteringProblem: k_perp must be >= 0");
  const HorizonReport rep = find_horizons(profile, kin);
  const double n0 = profile.n0();
  const double nb = n0 * kin.beta();
  const double q0 = (c_light / n0) * std::sqrt((1.0 - nb) * (1.0 + nb));
  return ScatteringProblem{profile, kin, k_perp, q0, k_perp * k_perp * q0 * q0,
                           rep.x_plus};
}

// Q = k_perp^2 c^2 g_tautau / (gamma^2 n^2): zero at the horizon, rising
// monotonically to Q_inf for a single-bump profile.
inline double potential_Q(const ScatteringProblem& problem, double x) {
  if (!(x > problem.x_plus))
    throw domain_error("potential_Q: x must lie outside the horizon");
  const double n = problem.profile.refractive_index(x);
  const double g = lapse_g_tautau(problem.profile, problem.kin, x);
  const double gamma2 = problem.kin.gamma * problem.kin.gamma;
  return problem.k_perp * problem.k_perp * c_light * c_light * g /
         (gamma2 * n * n);
}

enum class StepVariant { physical, paper_literal };

// Transmission across an abrupt potential step of height Q_inf.
// physical: |T|^2 = 4 k1 k2/(k1+k2)^2 with k1 = omega, k2 = sqrt(omega^2-Q).
// paper_literal: 4 omega sqrt(Q)/(omega+sqrt(Q))^2 verbatim, with the 0/0 at
// Q = 0 resolved to 1 by the k_perp -> 0 limit.  The two coincide at
// omega^2 = 2 Q_inf and are both exposed; physical is the default.
inline double step_transmission(double omega, double Q_inf,
                                StepVariant variant = StepVariant::physical) {
  if (!(omega > 0.0)) throw domain_error("step_transmission: omega must be > 0");
  if (!(Q_inf >= 0.0)) throw domain_error("step_transmission: Q_inf must be >= 0");
  if (Q_inf == 0.0) return 1.0;
  if (variant == StepVariant::paper_literal) {
    const double rq = std::sqrt(Q_inf);
    return 4.0 * omega * rq / ((omega + rq) * (omega + rq));
  }
  if (omega * omega <= Q_inf) return 0.0;
  const double k1 = omega;
  const double k2 = std::sqrt(omega * omega - Q_inf);
  return 4.0 * k1 * k2 / ((k1 + k2) * (k1 + k2));
}

// Lab-frame greybody factor of an out mode at angle theta.  Follows the
// boost substitution omega = gamma (omega_l - v k_xl) against the step height
// Q_inf = k_perp^2 q0^2; with that pairing the barrier can never exceed the
// frequency (the asymptotic dispersion relation forbids the sub-barrier
// case), which is asserted rather than assumed.
inline double greybody_lab(double omega_l, double theta, double k_perp,
                           const FrameKinematics& kin, double n0,
                           StepVariant variant = StepVariant::physical) {
  if (!(omega_l > 0.0)) throw domain_error("greybody_lab: omega_l must be > 0");
  const double k_l = n0 * omega_l / c_light;
  if (std::abs(k_perp - k_l * std::sin(theta)) > 1e-9 * k_l)
    throw domain_error(
        "greybody_lab: k_perp inconsistent with the asymptotic dispersion relation");
  const double k_xl = k_l * std::cos(theta);
  const double omega = kin.gamma * (omega_l - kin.v * k_xl);
  const double nb = n0 * kin.beta();
  const double q0 = (c_light / n0) * std::sqrt((1.0 - nb) * (1.0 + nb));
  const double Q_inf = k_perp * k_perp * q0 * q0;
  if (omega * omega < Q_inf)
    throw internal_inconsistency_error(
        "greybody_lab: sub-barrier mode ('cannot occur' condition violated)");
  return step_transmission(omega, Q_inf, variant);
}

struct NumerovResult {
  double transmission;  // flux transmission |T|^2
  double reflection;    // flux reflection |R|^2
  double flux_sum;      // |R|^2 + |T|^2, conserved by the recurrence
  std::size_t points;
};

namespace detail {

// Numerov sweep for phi'' + g(s) phi = 0 on a uniform grid with incidence
// from the left.  g must be positive (propagating) at both ends; the three
// end nodes on each side are assumed constant so the discrete plane-wave
// matching is exact and the discrete Wronskian bookkeeping closes to machine
// precision.
inline NumerovResult numerov_scatter(std::vector<double> g, double h) {
  using namespace std::complex_literals;
  const std::size_t n = g.size();
  if (n < 8) throw domain_error("numerov_scatter: grid too small");
  // Exact discrete matching: clamp three nodes at each end.
  g[0] = g[1] = g[2];
  g[n - 1] = g[n - 2] = g[n - 3];
  const double gl = g[0], gr = g[n - 1];
  if (!(gl > 0.0 && gr > 0.0))
    throw domain_error("numerov_scatter: evanescent end zones");
  for (double gi : g) {
    if (gi > 0.0 && std::sqrt(gi) * h > 0.5)
      throw resolution_error("numerov_scatter: phase advance per step > 0.5 rad");
  }
  auto disc_theta = [&](double gi) {
    const double C = (1.0 - 5.0 * h * h * gi / 12.0) / (1.0 + h * h * gi / 12.0);
    if (!(C > -1.0 && C < 1.0))
      throw resolution_error("numerov_scatter: step outside the stability band");
    return std::acos(C);
  };
  const double th_l = disc_theta(gl);
  const double th_r = disc_theta(gr);

  // Transmitted discrete plane wave on the right, recurrence run backward.
  const double w_fac = h * h / 12.0;
  cplx phi_np1 = std::exp(1i * th_r);  // phi at node n-1
  cplx phi_n = 1.0;                    // phi at node n-2
  for (std::size_t j = n - 2; j-- > 0;) {
    const cplx phi_jm =
        (2.0 * (1.0 - 5.0 * w_fac * g[j + 1]) * phi_n -
         (1.0 + w_fac * g[j + 2]) * phi_np1) /
        (1.0 + w_fac * g[j]);
    phi_np1 = phi_n;
    phi_n = phi_jm;
  }
  // phi_n = phi(node 0), phi_np1 = phi(node 1): decompose into A e^{i th j} +
  // B e^{-i th j}.
  const cplx e = std::exp(1i * th_l);
  const cplx A = (phi_np1 - phi_n / e) / (e - 1.0 / e);
  const cplx B = phi_n - A;

  const double wl = 1.0 + w_fac * gl;
  const double wr = 1.0 + w_fac * gr;
  const double flux_ratio =
      (std::sin(th_r) * wr * wr) / (std::sin(th_l) * wl * wl);
  NumerovResult res;
  res.transmission = flux_ratio / std::norm(A);
  res.reflection = std::norm(B) / std::norm(A);
  res.flux_sum = res.transmission + res.reflection;
  res.points = n;
  return res;
}

}  // namespace detail

// Numerov oracle on a caller-supplied potential Q(s) sampled uniformly on
// [s_min, s_max]; npoints odd keeps the midpoint on a node.
inline NumerovResult numerov_transmission_uniform(
    const std::function<double(double)>& Q_of_s, double s_min, double s_max,
    double omega, std::size_t npoints) {
  if (!(s_max > s_min)) throw domain_error("numerov: need s_max > s_min");
  const double h = (s_max - s_min) / double(npoints - 1);
  std::vector<double> g(npoints);
  for (std::size_t j = 0; j < npoints; ++j)
    g[j] = omega * omega - Q_of_s(s_min + double(j) * h);
  return detail::numerov_scatter(std::move(g), h);
}

// Exact transmission oracle for the profile-induced potential: solves
// phi'' + (omega^2 - Q(s)) phi = 0 on the boosted tortoise grid spanning
// Q in [1e-6, 1-1e-6] Q_inf and matches discrete plane waves at both ends.
inline NumerovResult numerov_transmission(const ScatteringProblem& problem,
                                          double omega,
                                          std::size_t min_points = 20000) {
  if (!(problem.Q_inf > 0.0))
    throw domain_error("numerov_transmission: Q_inf must be positive (k_perp > 0)");
  if (!(omega * omega > problem.Q_inf))
    throw domain_error("numerov_transmission: need omega^2 > Q_inf");

  const auto [sup_lo, sup_hi] = problem.profile.support();
  // Far-side anchor where Q has flattened out; step outward until the
  // support edge is flat enough.
  const double span = sup_hi - sup_lo;
  double x_far = std::max(sup_hi, problem.x_plus + 0.1 * span);
  for (int i = 0; std::abs(potential_Q(problem, x_far) - problem.Q_inf) >
                  1e-8 * problem.Q_inf;
       ++i) {
    if (i > 100)
      throw internal_inconsistency_error(
          "numerov_transmission: potential never flattens");
    x_far += span;
  }

  auto q_rel = [&](double x) { return potential_Q(problem, x) / problem.Q_inf; };
  const double x_lo = num::bisect(
      [&](double x) { return q_rel(x) - 1e-6; },
      problem.x_plus + 1e-14 * (x_far - problem.x_plus), x_far, 0.0, 0.0);
  const double x_hi = num::bisect(
      [&](double x) { return q_rel(x) - (1.0 - 1e-6); }, x_lo, x_far, 0.0, 0.0);

  // Total boosted tortoise length, then a uniform grid in s via RK4 on
  // dx/ds = c g/(gamma n).  Cancellation in 1 - n v/c caps the achievable
  // integrand accuracy near the horizon-side anchor at ~1e-7 relative, and
  // grid placement needs far less than that.
  const double gam = problem.kin.gamma;
  auto ds_dx = [&](double x) {
    return gam * problem.profile.refractive_index(x) /
           (c_light * lapse_g_tautau(problem.profile, problem.kin, x));
  };
  const double S =
      num::integrate<double>(ds_dx, x_lo, x_hi, 1e-6, 0.0, 1u << 22).value;

  std::size_t n = std::max<std::size_t>(
      min_points, std::size_t(std::ceil(omega * S / 0.03)) + 1);
  if (n % 2 == 0) ++n;
  const double h = S / double(n - 1);

  auto dx_ds = [&](double x) { return 1.0 / ds_dx(x); };
  std::vector<double> g(n);
  double x = x_lo;
  g[0] = omega * omega - potential_Q(problem, x);
  for (std::size_t j = 1; j < n; ++j) {
    const double k1 = dx_ds(x);
    const double k2 = dx_ds(x + 0.5 * h * k1);
    const double k3 = dx_ds(x + 0.5 * h * k2);
    const double k4 = dx_ds(x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    g[j] = omega * omega - potential_Q(problem, x);
  }
  return detail::numerov_scatter(std::move(g), h);
}

}  // namespace riphawk
