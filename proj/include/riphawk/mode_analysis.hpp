#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "riphawk/constants.hpp"
#include "riphawk/errors.hpp"
#include "riphawk/horizon.hpp"
#include "riphawk/kinematics.hpp"
#include "riphawk/numerics/ode.hpp"
#include "riphawk/rip_profile.hpp"

namespace riphawk {

using cplx = std::complex<double>;

// Conserved numbers of a monochromatic out mode (retarded/advanced variables
// u = x_l - v t_l, w = x_l + v t_l) together with its lab observables.
// Conventions for out modes: omega_l > 0, k_xl > 0, k_w < 0, k_u > -k_w.
struct ModeSpec {
  double k_w;      // advanced-coordinate wavenumber [rad/m]
  double k_perp;   // transverse magnitude [rad/m]
  double omega_l;  // lab angular frequency [rad/s]
  double k_xl;     // lab longitudinal wavenumber [rad/m]
  double theta;    // lab emission angle [rad]

  // Build from lab observables using the asymptotic dispersion relation
  // n0^2 omega_l^2 = |k_l|^2 c^2.
  static ModeSpec from_lab(double omega_l, double theta, double n0,
                           const FrameKinematics& kin) {
    if (!(omega_l > 0.0)) throw domain_error("ModeSpec: omega_l must be > 0");
    if (!(theta >= 0.0 && theta <= pi))
      throw domain_error("ModeSpec: theta must lie in [0, pi]");
    const double k_l = n0 * omega_l / c_light;
    ModeSpec m;
    m.omega_l = omega_l;
    m.theta = theta;
    m.k_xl = k_l * std::cos(theta);
    m.k_perp = k_l * std::sin(theta);
    m.k_w = 0.5 * (m.k_xl - omega_l / kin.v);
    return m;
  }

  double ku(const FrameKinematics& kin) const {
    return 0.5 * (k_xl + omega_l / kin.v);
  }
};

struct KuRoots {
  double k_u_plus;    // singular root (diverges at a horizon) [rad/m]
  double k_u_minus;   // regular root [rad/m]
  bool propagating;   // false: evanescent, fields carry the common magnitude
};

// WKB roots of the local dispersion relation
//   (n v/c)^2 (k_u - k_w)^2 - (k_u + k_w)^2 - k_perp^2 = 0,
// solved for k_u at local index n.
inline KuRoots wkb_ku_roots(double k_w, double k_perp, double n,
                            const FrameKinematics& kin) {
  if (!(n > 0.0)) throw domain_error("wkb_ku_roots: n must be positive");
  if (k_w == 0.0) throw domain_error("wkb_ku_roots: k_w must be nonzero");
  const double b = n * kin.beta();
  const double one_minus_b2 = (1.0 - b) * (1.0 + b);
  if (one_minus_b2 == 0.0)
    throw horizon_singular_error("wkb_ku_roots: n v/c = 1 (on a horizon)");
  const double ratio2 = (k_perp * k_perp) / (k_w * k_w);
  const double radicand = 1.0 - ratio2 * one_minus_b2 / (4.0 * b * b);
  KuRoots out;
  out.propagating = radicand >= 0.0;
  if (!out.propagating) {
    // Complex-conjugate pair; report the common magnitude sqrt(ku+ ku-).
    const double prod = k_w * k_w + k_perp * k_perp / one_minus_b2;
    const double mag = std::sqrt(std::abs(prod));
    out.k_u_plus = out.k_u_minus = mag;
    return out;
  }
  const double root = std::sqrt(radicand);
  const double pre = -k_w / one_minus_b2;
  out.k_u_plus = pre * (1.0 + b * b + 2.0 * b * root);
  out.k_u_minus = pre * (1.0 + b * b - 2.0 * b * root);
  return out;
}

// Thermality exponent sigma_b = 2 c k_w / (v n'(u_+)) with n'(u_+) the
// u-derivative of the index at the black-hole horizon (= gamma dn/dx(x_+)).
inline double sigma_b_exponent(double k_w, double dn_du_plus,
                               const FrameKinematics& kin) {
  return 2.0 * c_light * k_w / (kin.v * dn_du_plus);
}

inline double sigma_b_exponent(const ModeSpec& mode, const RipProfile& profile,
                               const FrameKinematics& kin) {
  const HorizonReport rep = find_horizons(profile, kin);
  const double dn_du = kin.gamma * profile.dn_dx(rep.x_plus);
  return sigma_b_exponent(mode.k_w, dn_du, kin);
}

struct NearHorizonPhase {
  double sigma_b;  // coefficient of the logarithm
  double phase;    // sigma_b * log(u - u_plus)
};

// Near-horizon WKB phase of the singular root, phase ~ sigma_b ln(u - u_+).
// Valid for u - u_+ small against the horizon separation.
inline NearHorizonPhase near_horizon_phase(double u, const ModeSpec& mode,
                                           const RipProfile& profile,
                                           const FrameKinematics& kin) {
  const HorizonReport rep = find_horizons(profile, kin);
  if (!(u > rep.u_plus))
    throw domain_error("near_horizon_phase: u must lie outside the horizon (u > u_+)");
  const double dn_du = kin.gamma * profile.dn_dx(rep.x_plus);
  const double sb = sigma_b_exponent(mode.k_w, dn_du, kin);
  return {sb, sb * std::log(u - rep.u_plus)};
}

// Indicial exponents of the mode equation at the Fuchsian point u_+:
// alpha_1 = 0 and alpha_2 = 1 + i sigma_b.
inline std::pair<cplx, cplx> frobenius_exponents(const ModeSpec& mode,
                                                 const RipProfile& profile,
                                                 const FrameKinematics& kin) {
  const double sb = sigma_b_exponent(mode, profile, kin);
  return {cplx(0.0, 0.0), cplx(1.0, sb)};
}

// One Frobenius solution about u_+.  The series variable is the scaled
// coordinate zeta = (u - u_+)/radius, which keeps coefficients O(1):
//   A(zeta) = zeta^alpha sum_n c_n zeta^n,  c_0 = 1.
struct FrobeniusSolution {
  cplx alpha;
  std::vector<cplx> coefficients;
  double radius;  // convergence disc |u - u_+| < radius = |u_+ - u_-|
  double u_plus;

  cplx eval(double u) const {
    const double zeta = (u - u_plus) / radius;
    cplx s{};
    for (std::size_t n = coefficients.size(); n-- > 0;)
      s = s * zeta + coefficients[n];
    return std::pow(cplx(zeta, 0.0), alpha) * s;
  }

  // d/du of the solution.
  cplx eval_deriv(double u) const {
    const double zeta = (u - u_plus) / radius;
    cplx s{};
    for (std::size_t n = coefficients.size(); n-- > 0;)
      s = s * zeta + (alpha + cplx(double(n), 0.0)) * coefficients[n];
    return std::pow(cplx(zeta, 0.0), alpha - 1.0) * s / radius;
  }
};

struct FrobeniusPair {
  FrobeniusSolution regular;   // alpha_1 = 0
  FrobeniusSolution singular;  // alpha_2 = 1 + i sigma_b
};

namespace detail {

// Power-series helpers on a fixed truncation length.
inline std::vector<double> series_mul(const std::vector<double>& a,
                                      const std::vector<double>& b) {
  std::vector<double> c(a.size(), 0.0);
  for (std::size_t m = 0; m < c.size(); ++m)
    for (std::size_t i = 0; i <= m; ++i) c[m] += a[i] * b[m - i];
  return c;
}

// w = a / b with b[0] != 0.
inline std::vector<double> series_div(const std::vector<double>& a,
                                      const std::vector<double>& b) {
  std::vector<double> w(a.size(), 0.0);
  for (std::size_t m = 0; m < w.size(); ++m) {
    double acc = a[m];
    for (std::size_t j = 1; j <= m; ++j) acc -= b[j] * w[m - j];
    w[m] = acc / b[0];
  }
  return w;
}

struct ModeOdeCoeffs {
  // Exact coefficients of A'' + B(u) A' + C(u) A = 0.
  const RipProfile& profile;
  const FrameKinematics& kin;
  double k_w, k_perp2;

  void operator()(double u, const num::OdeState& y, num::OdeState& dy) const {
    const double n = profile.refractive_index(kin.gamma * u);
    const double nv = n * kin.v;
    const double denom = (c_light - nv) * (c_light + nv);  // c^2 - n^2 v^2
    const cplx B = cplx(0.0, 2.0 * k_w) *
                   ((c_light * c_light + nv * nv) / denom);
    const cplx C = -(k_w * k_w + k_perp2 * c_light * c_light / denom);
    dy[0] = y[1];
    dy[1] = -B * y[1] - C * y[0];
  }
};

}  // namespace detail

// Frobenius series of the mode equation about u_+ for both indicial
// exponents.  Taylor data of the profile is generated by the exact per-shape
// recurrences; a residual check against the exact ODE guards the truncation,
// retrying with more terms up to n_max.
inline FrobeniusPair frobenius_series(const ModeSpec& mode,
                                      const RipProfile& profile,
                                      const FrameKinematics& kin, int n_terms = 20,
                                      int n_max = 60) {
  if (!profile.analytic())
    throw domain_error("frobenius_series: profile must be analytic near u_+");
  const HorizonReport rep = find_horizons(profile, kin);
  const double radius = rep.u_plus - rep.u_minus;  // > 0
  const double radius_x = rep.x_plus - rep.x_minus;
  const double v = kin.v;

  auto build = [&](int N) -> FrobeniusPair {
    const int M = N + 3;
    // n(zeta) as a Taylor series in zeta = (u - u_+)/radius.
    const auto ibar = profile.intensity_taylor(rep.x_plus, radius_x, M);
    std::vector<double> nser(M);
    for (int m = 0; m < M; ++m)
      nser[m] = profile.eta() * ibar[m] + (m == 0 ? profile.n0() : 0.0);
    const auto nsq = detail::series_mul(nser, nser);
    // s = c^2 - v^2 n^2 vanishes at the horizon; drop the O(1e-14) residue of
    // the constant term so s/zeta is a clean series.
    std::vector<double> s(M), t(M);
    for (int m = 0; m < M; ++m) {
      s[m] = -v * v * nsq[m] + (m == 0 ? c_light * c_light : 0.0);
      t[m] = v * v * nsq[m] + (m == 0 ? c_light * c_light : 0.0);
    }
    std::vector<double> r(M - 1);
    for (int m = 0; m + 1 < M; ++m) r[m] = s[m + 1];
    t.resize(M - 1);
    const auto t_over_r = detail::series_div(t, r);
    std::vector<double> one(M - 1, 0.0);
    one[0] = 1.0;
    const auto inv_r = detail::series_div(one, r);

    // p_k, q_k of the scaled equation Addot + (P/zeta) Adot + (Q/zeta) A = 0.
    const int L = N + 1;
    std::vector<cplx> p(L), q(L);
    const double kp2 = mode.k_perp * mode.k_perp;
    for (int m = 0; m < L; ++m) {
      p[m] = cplx(0.0, 2.0 * mode.k_w * radius) * t_over_r[m];
      q[m] = -kp2 * c_light * c_light * radius * radius * inv_r[m];
      if (m == 1) q[m] -= mode.k_w * mode.k_w * radius * radius;
    }

    auto recurse = [&](cplx alpha) -> FrobeniusSolution {
      std::vector<cplx> c(N, cplx{});
      c[0] = 1.0;
      for (int n = 1; n < N; ++n) {
        const cplx pivot = (alpha + double(n)) * (alpha + double(n) - 1.0 + p[0]);
        if (std::abs(pivot) < 1e-12 * (std::abs(alpha) + n) * (std::abs(alpha) + n))
          throw resonant_indicial_error(
              "frobenius_series: resonant indicial pivot");
        cplx acc{};
        for (int r2 = 0; r2 < n; ++r2) {
          cplx term = (alpha + double(r2)) * p[n - r2] * c[r2];
          if (n - r2 - 1 < L) term += q[n - r2 - 1] * c[r2];
          acc += term;
        }
        c[n] = -acc / pivot;
      }
      return FrobeniusSolution{alpha, std::move(c), radius, rep.u_plus};
    };

    // The singular exponent is built from the definitional sigma_b, not from
    // the numeric series constant term, so Im(alpha_2) matches the
    // thermality exponent bitwise (the two agree to ~1e-12 either way).
    const double sb =
        sigma_b_exponent(mode.k_w, kin.gamma * profile.dn_dx(rep.x_plus), kin);
    FrobeniusPair pair{recurse(cplx(0.0, 0.0)), recurse(cplx(1.0, sb))};
    return pair;
  };

  auto residual_ok = [&](const FrobeniusPair& pair) {
    const detail::ModeOdeCoeffs ode{profile, kin, mode.k_w,
                                    mode.k_perp * mode.k_perp};
    for (double frac : {0.1, 0.25, 0.5}) {
      const double u = rep.u_plus + frac * radius;
      for (const FrobeniusSolution* sol : {&pair.regular, &pair.singular}) {
        // Evaluate A'' from the series and compare with -(B A' + C A).
        const double zeta = frac;
        cplx s2{};
        for (std::size_t n = sol->coefficients.size(); n-- > 0;)
          s2 = s2 * zeta + (sol->alpha + double(n)) *
                               (sol->alpha + double(n) - 1.0) *
                               sol->coefficients[n];
        const cplx A2 = std::pow(cplx(zeta, 0.0), sol->alpha - 2.0) * s2 /
                        (radius * radius);
        num::OdeState y{sol->eval(u), sol->eval_deriv(u)}, dy;
        ode(u, y, dy);
        const cplx lhs = A2 - dy[1];  // dy[1] = -(B A' + C A)
        const double scale = std::abs(A2) + std::abs(dy[1]) + 1e-300;
        if (std::abs(lhs) / scale > 1e-8) return false;
      }
    }
    return true;
  };

  for (int N = n_terms;; N = std::min(N * 3 / 2 + 1, n_max)) {
    FrobeniusPair pair = build(N);
    if (residual_ok(pair)) return pair;
    if (N >= n_max) break;
  }
  throw error("frobenius_series: residual check failed at the maximum order");
}

// Independent continuation oracle: integrates the exact second-order mode
// equation with an adaptive embedded Runge-Kutta pair.  The interval must not
// contain either singular point.
inline cplx ode_oracle(const ModeSpec& mode, const RipProfile& profile,
                       const FrameKinematics& kin, double u_start, double u_end,
                       cplx value, cplx derivative, double rel_tol = 1e-10) {
  const double lo = std::min(u_start, u_end), hi = std::max(u_start, u_end);
  if (horizon_exists(profile, kin)) {
    const HorizonReport rep = find_horizons(profile, kin);
    for (double us : {rep.u_plus, rep.u_minus})
      if (us >= lo && us <= hi)
        throw ode_error("ode_oracle: interval crosses a singular point");
  }
  const detail::ModeOdeCoeffs rhs{profile, kin, mode.k_w,
                                  mode.k_perp * mode.k_perp};
  num::OdeState y{value, derivative};
  y = num::integrate_dopri5(rhs, y, u_start, u_end, rel_tol);
  return y[0];
}

// Same oracle returning value and derivative.
inline num::OdeState ode_oracle_state(const ModeSpec& mode,
                                      const RipProfile& profile,
                                      const FrameKinematics& kin,
                                      double u_start, double u_end, cplx value,
                                      cplx derivative, double rel_tol = 1e-10) {
  const double lo = std::min(u_start, u_end), hi = std::max(u_start, u_end);
  if (horizon_exists(profile, kin)) {
    const HorizonReport rep = find_horizons(profile, kin);
    for (double us : {rep.u_plus, rep.u_minus})
      if (us >= lo && us <= hi)
        throw ode_error("ode_oracle: interval crosses a singular point");
  }
  const detail::ModeOdeCoeffs rhs{profile, kin, mode.k_w,
                                  mode.k_perp * mode.k_perp};
  num::OdeState y{value, derivative};
  return num::integrate_dopri5(rhs, y, u_start, u_end, rel_tol);
}

}  // namespace riphawk
