#include <catch2/catch_amalgamated.hpp>

#include "riphawk/horizon.hpp"
#include "test_support.hpp"

using namespace riphawk;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// The standing example set: Gaussian bump at the k = 1/2 horizon level.
const RipProfile kProfile = RipProfile::gaussian(1.45, 1e-3, 1e-5);
const FrameKinematics kKin = FrameKinematics::from_c_over_v(1.4505);

}  // namespace

TEST_CASE("metric components in simple limits") {
  const auto p = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  const auto rest = FrameKinematics::from_speed(0.0);
  // Far from the bump and at rest: static medium.
  const auto m = metric_components(p, rest, 1.0);
  CHECK_THAT(m.g00, WithinRel(c_light * c_light / (1.45 * 1.45), 1e-13));
  CHECK(m.g01 == 0.0);
  CHECK(m.alpha == 0.0);
}

TEST_CASE("g_tautau is negative between the horizons, zero on them") {
  const auto m0 = metric_components(kProfile, kKin, 0.0);
  CHECK(m0.g_tautau < 0.0);  // n(0) = n0 + eta > c/v

  const auto rep = find_horizons(kProfile, kKin);
  for (double xh : {rep.x_plus, rep.x_minus})
    CHECK_THAT(metric_components(kProfile, kKin, xh).g_tautau,
               WithinAbs(0.0, 1e-12));
  // Outside: positive.
  CHECK(metric_components(kProfile, kKin, 2.0 * rep.x_plus).g_tautau > 0.0);
  CHECK(metric_components(kProfile, kKin, 2.0 * rep.x_minus).g_tautau > 0.0);
}

TEST_CASE("horizon existence window") {
  const auto p = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  // c/v = 1.46 > n0 + eta.
  CHECK_FALSE(horizon_exists(p, FrameKinematics::from_c_over_v(1.46)));
  CHECK(horizon_exists(p, kKin));

  // Boundary semantics, pinned with dyadic-exact numbers so the comparisons
  // are deterministic: v/c = 1/(n0+eta) is included, v/c = 1/n0 excluded.
  const auto pd = RipProfile::gaussian(1.9375, 0.0625, 1e-5);
  CHECK(horizon_exists(pd, FrameKinematics::from_c_over_v(2.0)));  // tangent
  const auto pu = RipProfile::gaussian(2.0, 1e-3, 1e-5);
  CHECK_FALSE(horizon_exists(pu, FrameKinematics::from_c_over_v(2.0)));
}

TEST_CASE("gaussian horizons: closed form, symmetry, scan agreement") {
  const auto rep = find_horizons(kProfile, kKin);
  CHECK_THAT(rep.x_plus, WithinRel(1.1774100225154747e-5, 1e-12));
  CHECK_THAT(rep.x_minus, WithinRel(-rep.x_plus, 1e-12));
  CHECK_THAT(rep.k_level, WithinRel(0.5, 1e-10));
  CHECK(rep.inner_roots.empty());
  CHECK_THAT(rep.u_plus, WithinRel(rep.x_plus / kKin.gamma, 1e-14));

  const auto scan = find_horizons(kProfile, kKin, HorizonMethod::scan);
  CHECK_THAT(scan.x_plus, WithinAbs(rep.x_plus, 1e-12 * 1e-5));
  CHECK_THAT(scan.x_minus, WithinAbs(rep.x_minus, 1e-12 * 1e-5));
  // Root quality: |1 - n v/c| below the solver tolerance.
  CHECK(std::abs(1.0 - kProfile.refractive_index(scan.x_plus) * kKin.beta()) <
        1e-14);
}

TEST_CASE("horizon errors") {
  const auto p = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  CHECK_THROWS_AS(find_horizons(p, FrameKinematics::from_c_over_v(1.46)),
                  no_horizon_error);
  CHECK_THROWS_WITH(find_horizons(p, FrameKinematics::from_c_over_v(1.46)),
                    "no horizon: c/v exceeds n0+eta");
  // Exact tangency (dyadic construction) carries the peak position.  The
  // closed form would give x_pm = 0 here; the library flags it instead of
  // returning a degenerate pair.
  const auto pd = RipProfile::gaussian(1.9375, 0.0625, 1e-5);
  try {
    find_horizons(pd, FrameKinematics::from_c_over_v(2.0));
    FAIL("expected tangent_horizon_error");
  } catch (const tangent_horizon_error& e) {
    CHECK_THAT(e.x_tangent, WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("shockwave horizons classified by slope sign") {
  const auto p = RipProfile::shockwave(1.45, 1e-3, 1e-5, 1e-6, 2e-6);
  const auto rep = find_horizons(p, kKin);
  CHECK(rep.x_minus < rep.x_plus);
  CHECK(p.dn_dx(rep.x_plus) < 0.0);
  CHECK(p.dn_dx(rep.x_minus) > 0.0);
  CHECK(std::abs(1.0 - p.refractive_index(rep.x_plus) * kKin.beta()) < 1e-14);
}

TEST_CASE("surface gravity vanishes where the profile is flat") {
  // A tangent horizon would sit at the peak, where dn/dx = 0.
  CHECK(surface_gravity(kProfile, kKin, 0.0) == 0.0);
}

TEST_CASE("surface gravity: both algebraic forms and the reference value") {
  const auto rep = find_horizons(kProfile, kKin);
  const double kappa = surface_gravity(kProfile, kKin, rep.x_plus);
  CHECK_THAT(kappa, WithinRel(4.7928036396e18, 1e-9));
  CHECK_THAT(surface_gravity_k_form(kProfile, rep.x_plus),
             WithinRel(kappa, 1e-12));
  // Gaussian closed form gamma^2 v^2 (k eta/sigma) sqrt(2 ln(1/k)).
  const double k = rep.k_level;
  const double closed = kKin.gamma * kKin.gamma * kKin.v * kKin.v *
                        (k * 1e-3 / 1e-5) * std::sqrt(2.0 * std::log(1.0 / k));
  CHECK_THAT(kappa, WithinRel(closed, 1e-9));
}

TEST_CASE("temperature in the pulse frame") {
  CHECK(temperature_pulse(0.0) == 0.0);
  const auto rep = find_horizons(kProfile, kKin);
  CHECK_THAT(rep.T_pulse, WithinRel(1.9434883571e-2, 1e-9));
  CHECK_THAT(temperature_pulse(2.0 * rep.kappa_plus),
             WithinRel(2.0 * rep.T_pulse, 1e-14));
}

TEST_CASE("temperature in the lab frame") {
  const auto rep = find_horizons(kProfile, kKin);
  const auto rest = FrameKinematics::from_speed(0.0);
  CHECK(temperature_lab(rep.T_pulse, 0.7, rest, 1.45) == rep.T_pulse);
  CHECK_THAT(temperature_lab(rep.T_pulse, pi / 2, kKin, 1.45),
             WithinRel(rep.T_pulse / kKin.gamma, 1e-13));
  CHECK_THAT(temperature_lab(rep.T_pulse, 0.0, kKin, 1.45),
             WithinRel(40.84009, 1e-6));
  // Algebraic identity T(theta) gamma (1-(v/c) n0 cos theta) = T_pulse.
  for (double th : {0.0, 0.3, 1.0, 1.4, pi / 2}) {
    const double T = temperature_lab(rep.T_pulse, th, kKin, 1.45);
    CHECK_THAT(T * kKin.gamma * (1.0 - kKin.beta() * 1.45 * std::cos(th)),
               WithinRel(rep.T_pulse, 1e-13));
  }
}

TEST_CASE("acoustic map special values") {
  // Vacuum limit: n = 1 gives no flow.  Use a profile evaluated far away with
  // n0 = 1 and negligible eta so n ~ 1.
  const auto p1 = RipProfile::gaussian(1.0, 1e-12, 1e-5);
  const auto kin = FrameKinematics::from_speed(2.0e8);
  const auto a1 = acoustic_map(p1, kin, 1.0);
  CHECK_THAT(a1.v_tilde, WithinAbs(0.0, 1e-3));
  CHECK(a1.c_tilde == c_light);

  // At the horizon n = c/v the flow reaches c.
  const auto rep = find_horizons(kProfile, kKin);
  const auto ah = acoustic_map(kProfile, kKin, rep.x_plus);
  CHECK_THAT(ah.v_tilde, WithinRel(c_light, 1e-10));

  // Static-medium checks of the conformal factor and coordinate stretch.
  const auto rest = FrameKinematics::from_speed(0.0);
  const auto a0 = acoustic_map(kProfile, rest, 1.0);
  CHECK_THAT(a0.Omega2, WithinRel(1.0 / (1.45 * 1.45), 1e-13));
  CHECK_THAT(a0.dxtilde_dx, WithinRel(-1.45, 1e-13));
}

TEST_CASE("surface gravity triple agreement at the reference point") {
  const auto rep = find_horizons(kProfile, kKin);
  const double k_killing = surface_gravity(kProfile, kKin, rep.x_plus);
  const double k_acoustic = surface_gravity_acoustic(kProfile, kKin);
  const double beta_e = euclidean_period(kProfile, kKin);
  const double k_euclid = 2.0 * pi * c_light * c_light / beta_e;
  CHECK_THAT(k_acoustic, WithinRel(k_killing, 1e-10));
  CHECK_THAT(k_euclid, WithinRel(k_killing, 1e-10));
  CHECK_THAT(beta_e, WithinRel(0.11782342358, 1e-9));
  // hbar c/(k_b beta) reproduces the pulse temperature.
  CHECK_THAT(hbar * c_light / (k_boltzmann * beta_e),
             WithinRel(rep.T_pulse, 1e-12));
}

TEST_CASE("triple agreement across a random parameter sweep") {
  auto rng = test_support::make_rng(23);
  std::uniform_real_distribution<double> n0d(1.1, 2.0), etad(1e-5, 1e-2),
      sigd(1e-6, 1e-4), kd(0.05, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double n0 = n0d(rng), eta = etad(rng), sigma = sigd(rng);
    const double k = kd(rng);
    const auto p = RipProfile::gaussian(n0, eta, sigma);
    const auto kin = FrameKinematics::from_c_over_v(n0 + k * eta);
    REQUIRE(horizon_exists(p, kin));
    const auto rep = find_horizons(p, kin);
    const double k1 = surface_gravity(p, kin, rep.x_plus);
    const double k2 = surface_gravity_acoustic(p, kin);
    const double k3 = 2.0 * pi * c_light * c_light / euclidean_period(p, kin);
    CHECK_THAT(k2, WithinRel(k1, 1e-9));
    CHECK_THAT(k3, WithinRel(k1, 1e-9));
  }
}

TEST_CASE("degenerate limit: horizons merge and kappa drops monotonically") {
  const auto p = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  double prev_sep = 1.0, prev_kappa = 1e30;
  for (double k : {0.5, 0.8, 0.95, 0.99, 0.999}) {
    const auto kin = FrameKinematics::from_c_over_v(1.45 + k * 1e-3);
    const auto rep = find_horizons(p, kin);
    const double sep = rep.x_plus - rep.x_minus;
    CHECK(sep < prev_sep);
    CHECK(rep.kappa_plus < prev_kappa);
    prev_sep = sep;
    prev_kappa = rep.kappa_plus;
  }
}

TEST_CASE("double-peaked table: outermost pair reported, inner roots listed") {
  // Two bumps, both sliced by the horizon level: four roots.  The report
  // carries the outermost falling/rising pair and lists the two inner ones.
  std::vector<double> xs, ys;
  for (int i = -60; i <= 60; ++i) {
    const double x = i * 1e-6;
    ys.push_back(std::exp(-0.5 * (x - 2e-5) * (x - 2e-5) / 2.5e-11) +
                 0.9 * std::exp(-0.5 * (x + 2e-5) * (x + 2e-5) / 2.5e-11));
    xs.push_back(x);
  }
  const auto p = RipProfile::tabulated(1.45, 1e-3, xs, ys);
  // Slice at a level both peaks reach (the normalized second peak tops ~0.9).
  const auto kin = FrameKinematics::from_c_over_v(1.45 + 0.5 * 1e-3);
  const auto rep = find_horizons(p, kin);
  CHECK(rep.inner_roots.size() == 2);
  CHECK(p.dn_dx(rep.x_plus) < 0.0);
  CHECK(p.dn_dx(rep.x_minus) > 0.0);
  CHECK(rep.x_plus > 2e-5);    // right flank of the right bump
  CHECK(rep.x_minus < -2e-5);  // left flank of the left bump
  for (double r : rep.inner_roots) {
    CHECK(r > rep.x_minus);
    CHECK(r < rep.x_plus);
  }
}

TEST_CASE("euclidean period scales inversely with kappa") {
  const auto p1 = RipProfile::gaussian(1.45, 1e-3, 1e-5);
  const auto p2 = RipProfile::gaussian(1.45, 1e-3, 0.5e-5);  // doubles dn/dx
  const double b1 = euclidean_period(p1, kKin);
  const double b2 = euclidean_period(p2, kKin);
  CHECK_THAT(b2, WithinRel(0.5 * b1, 1e-12));
}
