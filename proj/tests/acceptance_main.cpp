// Acceptance suite: one pass/fail line per criterion, each with its pinned
// tolerance.  Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "riphawk/riphawk.hpp"

using namespace riphawk;

#ifndef RIPHAWK_MATERIALS_DIR
#define RIPHAWK_MATERIALS_DIR "materials"
#endif

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1. Pulse-frame temperature of the reference Gaussian configuration.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto profile = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  const auto kin = FrameKinematics::from_c_over_v(1.4505);
  const auto rep = find_horizons(profile, kin);
  const double dt = seconds_since(t0);
  const bool ok =
      std::abs(rep.T_pulse - 1.94e-2) <= 0.02e-2 && dt < 1.0;
  report(1, ok, "pulse-frame temperature 1.94e-2 K +- 0.02e-2 K",
         "T_pulse = " + fmt(rep.T_pulse) + " K, runtime " + fmt(dt) + " s");
}

// 2. Killing / acoustic / Euclidean surface gravity agreement, 1e-9 relative
// over 100 random valid parameter sets.
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x5ca1ab1e);
  std::uniform_real_distribution<double> n0d(1.1, 2.0), etad(1e-5, 1e-2),
      sigd(1e-6, 1e-4), kd(0.05, 0.95);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto p = RipProfile::gaussian(n0d(rng), etad(rng), sigd(rng));
    const auto kin = FrameKinematics::from_c_over_v(p.n0() + kd(rng) * p.eta());
    const auto rep = find_horizons(p, kin);
    const double k1 = surface_gravity(p, kin, rep.x_plus);
    const double k2 = surface_gravity_acoustic(p, kin);
    const double k3 = 2.0 * pi * c_light * c_light / euclidean_period(p, kin);
    worst = std::max(worst, std::abs(k2 - k1) / k1);
    worst = std::max(worst, std::abs(k3 - k1) / k1);
  }
  const double dt = seconds_since(t0);
  const bool ok = worst <= 1e-9 && dt < 5.0;
  report(2, ok, "surface-gravity triple agreement to 1e-9 over 100 draws",
         "worst rel dev = " + fmt(worst) + ", runtime " + fmt(dt) + " s");
}

// 3. Bogoliubov thermality: quadrature ratio e^{2 pi sigma} to 1e-8 with the
// leading prefactor and to 1e-6 with a perturbed series prefactor.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_leading = 0.0;
  for (double s : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const auto q = quadrature_magnitudes(s, 3.0, XiPrefactor::leading());
    worst_leading = std::max(
        worst_leading,
        std::abs(q.ratio - std::exp(2.0 * pi * s)) / std::exp(2.0 * pi * s));
  }
  // Perturbed prefactor from the actual Frobenius series of a reference mode.
  const auto profile = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  const auto kin = FrameKinematics::from_c_over_v(1.4505);
  ModeSpec mode{};
  mode.k_w = -100.0;
  const auto pair = frobenius_series(mode, profile, kin);
  const auto xi = XiPrefactor::from_frobenius(pair.singular);
  const double sb = sigma_b_exponent(mode, profile, kin);
  const auto qf =
      quadrature_magnitudes(sb, 1e8 / pair.singular.radius, xi);
  const double dev_series =
      std::abs(qf.ratio - std::exp(2.0 * pi * sb)) / std::exp(2.0 * pi * sb);
  const double dt = seconds_since(t0);
  const bool ok = worst_leading <= 1e-8 && dev_series <= 1e-6 && dt < 10.0;
  report(3, ok, "thermality ratio e^{2 pi sigma} (1e-8 leading, 1e-6 series)",
         "leading dev = " + fmt(worst_leading) +
             ", series dev = " + fmt(dev_series) + ", runtime " + fmt(dt) +
             " s");
}

// 4. The exponent identity hbar omega_l/(k_b T(theta)) = 2 pi sigma_b.
void criterion_4() {
  std::mt19937_64 rng(0xfeedbeef);
  std::uniform_real_distribution<double> n0d(1.2, 1.8), etad(1e-4, 5e-3),
      sigd(1e-6, 1e-4), kd(0.1, 0.9), om(1e12, 1e15), th(0.0, pi / 2);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = RipProfile::gaussian(n0d(rng), etad(rng), sigd(rng));
    const auto kin = FrameKinematics::from_c_over_v(p.n0() + kd(rng) * p.eta());
    const auto rep = find_horizons(p, kin);
    const double dn_du = kin.gamma * p.dn_dx(rep.x_plus);
    const double omega_l = om(rng), theta = th(rng);
    const auto mode = ModeSpec::from_lab(omega_l, theta, p.n0(), kin);
    const double sb = sigma_b_exponent(mode.k_w, dn_du, kin);
    const double T = temperature_lab(rep.T_pulse, theta, kin, p.n0());
    const double lhs = hbar * omega_l / (k_boltzmann * T);
    worst = std::max(worst, std::abs(lhs - 2.0 * pi * sb) / (2.0 * pi * sb));
  }
  const bool ok = worst <= 1e-12;
  report(4, ok,
         "exponent identity hbar w/(k_b T) = 2 pi sigma_b over 1000 draws",
         "worst rel dev = " + fmt(worst));
}

// 5. Greybody floor, Numerov-vs-step agreement and flux conservation.
void criterion_5() {
  const double n0 = 1.45;
  double min_grey = 1.0;
  for (double eta : {1e-3, 1e-4}) {
    const auto kin = FrameKinematics::from_c_over_v(n0 + 0.5 * eta);
    for (int i = 1; i <= 2000; ++i) {
      const double theta = (pi / 2) * i / 2000.0;
      const double w = 2e15;
      const double kp = n0 * w * std::sin(theta) / c_light;
      min_grey = std::min(min_grey, greybody_lab(w, theta, kp, kin, n0));
    }
  }
  const auto profile = RipProfile::gaussian(n0, 1e-3, 1e-5);
  const auto kin = FrameKinematics::from_c_over_v(1.4505);
  const auto prob = make_scattering_problem(profile, kin, 1e5);
  const double omega = std::sqrt(2.0 * prob.Q_inf);
  const auto numerov = numerov_transmission(prob, omega);
  const double step = step_transmission(omega, prob.Q_inf, StepVariant::physical);
  const double flux_dev = std::abs(numerov.flux_sum - 1.0);
  const bool ok = min_grey >= 0.9 &&
                  std::abs(numerov.transmission - step) <= 0.15 * step &&
                  flux_dev <= 1e-8;
  report(5, ok, "greybody >= 0.9; Numerov within 15% of step; flux to 1e-8",
         "min greybody = " + fmt(min_grey) + ", numerov = " +
             fmt(numerov.transmission) + " vs step " + fmt(step) +
             ", |flux-1| = " + fmt(flux_dev));
}

// 6. Cauchy dispersion windows: sqrt(3) bound ratio, exact coexistence flip,
// group-horizon disappearance where n(x) > c/v.
void criterion_6() {
  const auto cau = MaterialModel::cauchy(1.45, 5e-35);
  const auto kin = FrameKinematics::from_c_over_v(1.4515);
  const auto ph = phase_window_lab(cau, 1e-3, kin);
  const auto gr = group_window_lab(cau, 1e-3, kin);
  const double s3 = std::sqrt(3.0);
  const double dev_min =
      std::abs(gr.omega_min - ph.omega_min / s3) / (ph.omega_min / s3);
  const double dev_max =
      std::abs(gr.omega_max - ph.omega_max / s3) / (ph.omega_max / s3);

  const double boundary = (2.0 / 3.0) * (kin.c_over_v() - 1.45);
  const bool flip_ok =
      horizons_coexist(cau, boundary, kin) &&
      !horizons_coexist(cau, std::nextafter(boundary, 0.0), kin);

  // Group-horizon k_x turns complex exactly where n(x) > c/v.
  const auto strong = RipProfile::gaussian(1.45, 2e-3, 1e-5);
  bool disappearance_ok = true;
  for (int i = 0; i <= 200; ++i) {
    const double x = -4e-5 + 8e-5 * i / 200.0;
    const double n_x = 1.45 + strong.eta() * strong.intensity(x);
    const bool real_roots =
        group_horizon_kx(cau, strong, kin, 1e14, x).has_value();
    if (real_roots != (n_x <= kin.c_over_v())) disappearance_ok = false;
  }
  const bool ok =
      dev_min <= 1e-12 && dev_max <= 1e-12 && flip_ok && disappearance_ok;
  report(6, ok,
         "group bounds = phase/sqrt(3) to 1e-12; coexistence flip; "
         "group-horizon disappearance",
         "bound devs = " + fmt(dev_min) + "/" + fmt(dev_max) +
             (flip_ok ? ", flip exact" : ", flip BROKEN") +
             (disappearance_ok ? ", disappearance exact" : ", disappearance BROKEN"));
}

// 7. Fused-silica phase window at c/v = n_g(800 nm), eta = 1e-3 (external
// Sellmeier coefficients; deliberately loose bounds).
void criterion_7() {
  const auto silica = load_material_file(std::string(RIPHAWK_MATERIALS_DIR) +
                                         "/fused_silica_malitson.json");
  const double w800 = 2.0 * pi * c_light / 800e-9;
  const double ng = silica.group_index(w800);
  const auto kin = FrameKinematics::from_c_over_v(ng);
  const auto w = phase_window_lab(silica, 1e-3, kin);
  const double center_nm = 0.5 * (w.lambda_min + w.lambda_max) * 1e9;
  const double width_nm = (w.lambda_max - w.lambda_min) * 1e9;
  const bool ok = !w.empty && center_nm >= 425.0 && center_nm <= 445.0 &&
                  width_nm >= 10.0 && width_nm <= 20.0;
  report(7, ok, "fused-silica window centered 425-445 nm, width 10-20 nm",
         "n_g(800nm) = " + fmt(ng) + ", center = " + fmt(center_nm) +
             " nm, width = " + fmt(width_nm) + " nm");
}

// 8. Order-of-magnitude shock-front temperature (the latched published
// figures are not reproducible by literal substitution; the lab-frame value
// of the reference configuration computes to ~41 K, reported for context).
void criterion_8() {
  const auto shock = RipProfile::shockwave(1.45, 5e-3, 1e-5, 1e-6, 1e-6);
  const auto kin = FrameKinematics::from_c_over_v(1.45 + 0.5 * 5e-3);
  const auto rep = find_horizons(shock, kin);
  const bool ok = rep.T_pulse >= 0.3 && rep.T_pulse <= 3.0;

  const auto gauss = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  const auto gkin = FrameKinematics::from_c_over_v(1.4505);
  const auto grep = find_horizons(gauss, gkin);
  const double T_lab = temperature_lab(grep.T_pulse, 0.0, gkin, 1.45);
  report(8, ok, "shock-front T_pulse in [0.3, 3] K at delta_wh 1e-6, eta 5e-3",
         "T_pulse = " + fmt(rep.T_pulse) +
             " K; lab-frame reference evaluates to " + fmt(T_lab) + " K");
}

// 9. Frobenius series vs adaptive integrator, exact Im(alpha_2) = sigma_b,
// and the WKB log-phase asymptote.
void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto profile = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  const auto kin = FrameKinematics::from_c_over_v(1.4505);
  ModeSpec mode{};
  mode.k_w = -100.0;
  const auto rep = find_horizons(profile, kin);
  const auto pair = frobenius_series(mode, profile, kin, 32);
  const double R = pair.singular.radius;

  double worst_cont = 0.0;
  for (const FrobeniusSolution* sol : {&pair.singular, &pair.regular}) {
    const double u0 = rep.u_plus + 0.05 * R;
    const double u1 = rep.u_plus + 0.4 * R;
    const auto got = ode_oracle(mode, profile, kin, u0, u1, sol->eval(u0),
                                sol->eval_deriv(u0), 1e-11);
    worst_cont = std::max(worst_cont,
                          std::abs(got - sol->eval(u1)) / std::abs(sol->eval(u1)));
  }

  const double sb = sigma_b_exponent(mode, profile, kin);
  const bool alpha_exact = (pair.singular.alpha == cplx(1.0, sb));

  // WKB phase of the singular root over [u_+ + eps, u_+ + 2 eps] vs the
  // asymptote sigma_b ln 2.
  auto phase_increment = [&](double eps) {
    auto integrand = [&](double u) {
      const double n = profile.refractive_index(kin.gamma * u);
      return wkb_ku_roots(mode.k_w, mode.k_perp, n, kin).k_u_plus;
    };
    return num::integrate<double>(integrand, rep.u_plus + eps,
                                  rep.u_plus + 2.0 * eps, 1e-8)
        .value;
  };
  const double target = sb * std::log(2.0);
  const double wkb_dev =
      std::abs(phase_increment(1e-6 * R) - target) / std::abs(target);

  const double dt = seconds_since(t0);
  const bool ok =
      worst_cont <= 1e-7 && alpha_exact && wkb_dev <= 1e-4 && dt < 30.0;
  report(9, ok,
         "series-vs-integrator 1e-7; Im(alpha_2) = sigma_b exact; WKB "
         "asymptote",
         "continuation dev = " + fmt(worst_cont) + ", wkb dev = " +
             fmt(wkb_dev) + ", runtime " + fmt(dt) + " s");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
