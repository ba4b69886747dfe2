#include <catch2/catch_amalgamated.hpp>

#include "riphawk/greybody.hpp"
#include "test_support.hpp"

using namespace riphawk;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const RipProfile kProfile = RipProfile::gaussian(1.45, 1e-3, 1e-5);
const FrameKinematics kKin = FrameKinematics::from_c_over_v(1.4505);

}  // namespace

TEST_CASE("tortoise coordinate is linear where the index is flat") {
  // The Gaussian tail underflows beyond ~40 sigma, so the integrand is
  // exactly constant there.
  const double n0 = 1.45;
  const double g_inf = kKin.gamma * kKin.gamma *
                       (1.0 - n0 * n0 * kKin.beta() * kKin.beta());
  const double slope = n0 / (c_light * g_inf);
  const double x_ref = 50.0 * 1e-5;
  for (double dx : {1e-5, 5e-5, 2e-4}) {
    CHECK_THAT(tortoise(kProfile, kKin, x_ref + dx, x_ref),
               WithinRel(slope * dx, 1e-10));
  }
}

TEST_CASE("tortoise is strictly increasing and vanishes at the reference") {
  const auto rep = find_horizons(kProfile, kKin);
  const double x_ref = 3e-5;
  CHECK(tortoise(kProfile, kKin, x_ref, x_ref) == 0.0);
  double prev = -1e30;
  for (double x : {1.5e-5, 2e-5, 3e-5, 5e-5, 9e-5}) {
    REQUIRE(x > rep.x_plus);
    const double s = tortoise(kProfile, kKin, x, x_ref);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("tortoise diverges logarithmically at the horizon") {
  const auto rep = find_horizons(kProfile, kKin);
  // Local expansion: s(x_+ + 2e) - s(x_+ + e) -> n(x_+) ln 2 / (c g'(x_+)).
  const double n_h = kProfile.refractive_index(rep.x_plus);
  const double gprime = -2.0 * kKin.gamma * kKin.gamma * kKin.beta() *
                        kKin.beta() * n_h * kProfile.dn_dx(rep.x_plus);
  const double target = n_h * std::log(2.0) / (c_light * gprime);
  auto incr = [&](double eps) {
    auto integrand = [&](double xx) {
      return kProfile.refractive_index(xx) /
             (c_light * lapse_g_tautau(kProfile, kKin, xx));
    };
    return num::integrate<double>(integrand, rep.x_plus + eps,
                                  rep.x_plus + 2.0 * eps, 1e-7)
        .value;
  };
  const double d1 = std::abs(incr(1e-8) - target);
  const double d2 = std::abs(incr(1e-9) - target);
  CHECK(d2 < 0.3 * d1);
  CHECK_THAT(incr(1e-9), WithinRel(target, 1e-4));
  CHECK_THROWS_AS(tortoise(kProfile, kKin, 2e-5, rep.x_plus), domain_error);
}

TEST_CASE("scattering problem: q0 and the potential limits") {
  const auto prob = make_scattering_problem(kProfile, kKin, 1e5);
  CHECK_THAT(prob.q0, WithinRel(5.4282070484e6, 1e-9));
  CHECK_THAT(prob.Q_inf, WithinRel(1e10 * prob.q0 * prob.q0, 1e-12));

  // Q -> 0 at the horizon, Q -> Q_inf far away, monotone in between.
  CHECK(potential_Q(prob, prob.x_plus + 1e-12) < 1e-6 * prob.Q_inf);
  CHECK_THAT(potential_Q(prob, 1.0), WithinRel(prob.Q_inf, 1e-12));
  double prev = -1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = prob.x_plus + 1e-12 + (8e-5 - prob.x_plus) * i / 1000.0;
    const double Q = potential_Q(prob, x);
    CHECK(Q >= prev);
    CHECK(Q <= prob.Q_inf * (1.0 + 1e-12));
    prev = Q;
  }
  CHECK_THROWS_AS(potential_Q(prob, prob.x_plus - 1e-9), domain_error);
}

TEST_CASE("k_perp = 0 has no barrier at all") {
  const auto prob = make_scattering_problem(kProfile, kKin, 0.0);
  CHECK(prob.Q_inf == 0.0);
  CHECK(potential_Q(prob, 1e-5 + 2e-5) == 0.0);
  CHECK(step_transmission(1e12, prob.Q_inf) == 1.0);
}

TEST_CASE("step transmission reference values") {
  // omega^2 = 2 Q: both variants coincide at 4 sqrt(2)/(3+2 sqrt(2)).
  const double Q = 1e24;
  const double w2q = std::sqrt(2.0) * std::sqrt(Q);
  CHECK_THAT(step_transmission(w2q, Q, StepVariant::physical),
             WithinRel(0.9705627484771406, 1e-12));
  CHECK_THAT(step_transmission(w2q, Q, StepVariant::paper_literal),
             WithinRel(0.9705627484771406, 1e-12));
  // omega = 2 sqrt(Q): the two variants split.
  CHECK_THAT(step_transmission(2.0 * std::sqrt(Q), Q, StepVariant::physical),
             WithinRel(0.9948452238571286, 1e-12));
  CHECK_THAT(step_transmission(2.0 * std::sqrt(Q), Q, StepVariant::paper_literal),
             WithinRel(8.0 / 9.0, 1e-12));
  // Q = 0 transmits fully in both conventions.
  CHECK(step_transmission(1.0, 0.0, StepVariant::physical) == 1.0);
  CHECK(step_transmission(1.0, 0.0, StepVariant::paper_literal) == 1.0);
  // Sub-barrier.
  CHECK(step_transmission(0.5 * std::sqrt(Q), Q, StepVariant::physical) == 0.0);
  CHECK_THROWS_AS(step_transmission(0.0, Q), domain_error);
}

TEST_CASE("transmission bounded by unity") {
  auto rng = test_support::make_rng(53);
  std::uniform_real_distribution<double> wq(1.0, 100.0);
  const double Q = 4e20;
  for (int i = 0; i < 300; ++i) {
    const double w = wq(rng) * std::sqrt(Q);
    for (auto v : {StepVariant::physical, StepVariant::paper_literal}) {
      const double T = step_transmission(w, Q, v);
      CHECK(T >= 0.0);
      CHECK(T <= 1.0);
    }
  }
}

TEST_CASE("lab-frame greybody factor") {
  const double n0 = 1.45;
  // theta = 0: no transverse momentum, full transmission.
  CHECK(greybody_lab(2e15, 0.0, 0.0, kKin, n0) == 1.0);
  // theta = pi/2.
  const double w = 2e15;
  const double kp90 = n0 * w / c_light;
  const double g90 = greybody_lab(w, pi / 2, kp90, kKin, n0);
  CHECK(g90 >= 0.97);
  CHECK(g90 <= 1.0);
  // Inconsistent k_perp rejected.
  CHECK_THROWS_AS(greybody_lab(w, pi / 2, 0.5 * kp90, kKin, n0), domain_error);
}

TEST_CASE("greybody stays above 0.9 over the full emission hemisphere") {
  const double n0 = 1.45;
  const double w = 2e15;
  double min_g = 1.0;
  for (int i = 1; i <= 2000; ++i) {
    const double theta = (pi / 2) * i / 2000.0;
    const double kp = n0 * w * std::sin(theta) / c_light;
    min_g = std::min(min_g, greybody_lab(w, theta, kp, kKin, n0));
  }
  CHECK(min_g >= 0.9);
  // The floor is 4 (v/c)/(1+v/c)^2, reached where cos(theta) = n0 v/c.
  const double b = kKin.beta();
  CHECK_THAT(min_g, WithinRel(4.0 * b / ((1.0 + b) * (1.0 + b)), 1e-4));
}

TEST_CASE("greybody approaches unity as eta -> 0") {
  const double n0 = 1.45;
  const double w = 2e15;
  double prev_worst = 0.0;
  for (double eta : {1e-3, 1e-4, 1e-5}) {
    const auto kin = FrameKinematics::from_c_over_v(n0 + 0.5 * eta);
    double worst = 1.0;
    for (double theta : {0.05, 0.2, 0.6, 1.0, 1.4, pi / 2}) {
      const double kp = n0 * w * std::sin(theta) / c_light;
      worst = std::min(worst, greybody_lab(w, theta, kp, kin, n0));
    }
    CHECK(worst >= prev_worst - 1e-12);
    prev_worst = worst;
  }
  CHECK(prev_worst > 1.0 - 1e-5);
}

TEST_CASE("numerov: zero potential transmits exactly") {
  const auto r = numerov_transmission_uniform([](double) { return 0.0; }, 0.0,
                                              1.0, 50.0, 4001);
  CHECK_THAT(r.transmission, WithinRel(1.0, 1e-10));
  CHECK_THAT(r.flux_sum, WithinRel(1.0, 1e-12));
}

TEST_CASE("numerov: injected sharp step matches the closed form") {
  const double Q = 1e24;
  const double w = 1.3 * std::sqrt(Q);
  const double lam = 2.0 * pi / w;
  const double L = 2.0 * lam;
  auto step = [&](double s) { return s < 0.0 ? 0.0 : Q; };
  const auto r = numerov_transmission_uniform(step, -L, L, w, 200001);
  const double want = step_transmission(w, Q, StepVariant::physical);
  CHECK_THAT(r.transmission, WithinRel(want, 1e-8));
  CHECK_THAT(r.flux_sum, WithinRel(1.0, 1e-10));
}

TEST_CASE("numerov reproduces the smooth logistic-step closed form") {
  // Q(s) = Q_inf/(1 + e^{-s/a}) scatters with the exact reflection
  // R = [sinh(pi a (k1-k2))/sinh(pi a (k1+k2))]^2, an oracle independent of
  // the abrupt-step formula.
  const double Q = 1e24;
  const double w = 1.3e12;
  const double k1 = w;
  const double k2 = std::sqrt(w * w - Q);
  const double a = 3e-13;
  auto logistic = [&](double s) { return Q / (1.0 + std::exp(-s / a)); };
  const double L = 20.0 * a;
  const auto r = numerov_transmission_uniform(logistic, -L, L, w, 64001);
  const double R_exact = std::pow(
      std::sinh(pi * a * (k1 - k2)) / std::sinh(pi * a * (k1 + k2)), 2);
  CHECK_THAT(r.reflection, WithinRel(R_exact, 1e-6));
  CHECK_THAT(r.transmission, WithinRel(1.0 - R_exact, 1e-6));
  CHECK_THAT(r.flux_sum, WithinRel(1.0, 1e-10));
}

TEST_CASE("numerov resolution guard") {
  CHECK_THROWS_AS(numerov_transmission_uniform([](double) { return 0.0; }, 0.0,
                                               1.0, 1e4, 101),
                  resolution_error);
}

TEST_CASE("numerov on the smooth profile barrier vs the step formula") {
  const auto prob = make_scattering_problem(kProfile, kKin, 1e5);
  const double omega = std::sqrt(2.0 * prob.Q_inf);
  const auto r = numerov_transmission(prob, omega);
  const double step = step_transmission(omega, prob.Q_inf, StepVariant::physical);
  CHECK(std::abs(r.transmission - step) <= 0.15 * step);
  // Smooth barriers transmit more than the abrupt step.
  CHECK(r.transmission >= step);
  CHECK(r.transmission <= 1.0 + 1e-12);
  CHECK_THAT(r.flux_sum, WithinRel(1.0, 1e-8));
}

TEST_CASE("numerov on a weaker channel still conserves flux") {
  const auto prob = make_scattering_problem(kProfile, kKin, 3e2);
  const double omega = std::sqrt(2.0 * prob.Q_inf);
  const auto r = numerov_transmission(prob, omega);
  CHECK(r.transmission >= 0.97 * step_transmission(omega, prob.Q_inf));
  CHECK(r.transmission <= 1.0 + 1e-12);
  CHECK_THAT(r.flux_sum, WithinRel(1.0, 1e-8));
}

TEST_CASE("numerov preconditions") {
  const auto prob = make_scattering_problem(kProfile, kKin, 1e5);
  CHECK_THROWS_AS(numerov_transmission(prob, 0.5 * std::sqrt(prob.Q_inf)),
                  domain_error);
  const auto free_prob = make_scattering_problem(kProfile, kKin, 0.0);
  CHECK_THROWS_AS(numerov_transmission(free_prob, 1e12), domain_error);
}
