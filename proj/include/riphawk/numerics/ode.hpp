#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "riphawk/errors.hpp"

namespace riphawk::num {

using cplx = std::complex<double>;

// State for a second-order complex ODE written as a first-order system:
// y[0] = A, y[1] = A'.
using OdeState = std::array<cplx, 2>;

// Adaptive embedded Dormand-Prince 5(4) with standard step control.
// rhs(u, y, dydu) fills the derivative in place.
template <typename Rhs>
OdeState integrate_dopri5(Rhs&& rhs, OdeState y, double u0, double u1,
                          double rel_tol = 1e-10, double abs_tol = 1e-30,
                          std::size_t max_steps = 2'000'000) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // Error weights: b - bhat of the embedded 4th-order solution.
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double dir = (u1 >= u0) ? 1.0 : -1.0;
  const double span = std::abs(u1 - u0);
  if (span == 0.0) return y;
  double u = u0;
  double h = dir * span / 100.0;

  OdeState k1, k2, k3, k4, k5, k6, k7, yt, y5;
  rhs(u, y, k1);
  std::size_t steps = 0;
  while (dir * (u1 - u) > 0.0) {
    if (++steps > max_steps)
      throw ode_error("dopri5: step budget exhausted (stiff problem?)");
    if (std::abs(h) < 1e-14 * span)
      throw ode_error("dopri5: step underflow (stiff problem?)");
    if (dir * (u + h - u1) > 0.0) h = u1 - u;

    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
    rhs(u + c2 * h, yt, k2);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(u + c3 * h, yt, k3);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(u + c4 * h, yt, k4);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(u + c5 * h, yt, k5);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                          a64 * k4[i] + a65 * k5[i]);
    rhs(u + h, yt, k6);
    for (int i = 0; i < 2; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    rhs(u + h, y5, k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);
      const double sc =
          abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (err <= 1.0) {
      u += h;
      y = y5;
      k1 = k7;  // FSAL
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= fac;
  }
  return y;
}

}  // namespace riphawk::num
