#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "riphawk/errors.hpp"

namespace riphawk::num {

// Bisection on a bracketed sign change.  Stops when |f| <= ftol or the bracket
// shrinks below xtol.  Returns the midpoint of the final bracket.
template <typename F>
double bisect(F&& f, double lo, double hi, double ftol, double xtol,
              int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw domain_error("bisect: endpoints do not bracket a sign change");
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < max_iter; ++i) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= ftol || (hi - lo) <= xtol) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return mid;
}

// Golden-section maximization on [lo, hi].  Returns (x_max, f(x_max)).
// Assumes f is unimodal on the interval; on a flat plateau any plateau point
// is an acceptable argmax.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol,
                                     int max_iter = 400) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Sample f on a uniform grid of n points and return all sign-change brackets
// [x_i, x_{i+1}], in increasing order.  Grid nodes where f vanishes exactly are
// treated as (degenerate) brackets.
template <typename F>
std::vector<std::pair<double, double>> scan_brackets(F&& f, double lo,
                                                     double hi, int n) {
  std::vector<std::pair<double, double>> out;
  const double h = (hi - lo) / (n - 1);
  double xp = lo;
  double fp = f(xp);
  for (int i = 1; i < n; ++i) {
    const double x = lo + i * h;
    const double fx = f(x);
    if (fp == 0.0)
      out.emplace_back(xp, xp);
    else if ((fp > 0) != (fx > 0))
      out.emplace_back(xp, x);
    xp = x;
    fp = fx;
  }
  if (fp == 0.0) out.emplace_back(xp, xp);
  return out;
}

}  // namespace riphawk::num
