#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "riphawk/errors.hpp"

namespace riphawk::num {

// Fritsch-Carlson monotone cubic (PCHIP).  Shape preserving: no overshoot
// between knots, so data in [0,1] stays in [0,1].
class Pchip {
 public:
  Pchip() = default;

  Pchip(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
      throw domain_error("Pchip: need at least two samples, same lengths");
    for (std::size_t i = 1; i < n; ++i)
      if (!(x_[i] > x_[i - 1]))
        throw domain_error("Pchip: abscissae must be strictly increasing");
    d_.resize(n);
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x_[i + 1] - x_[i];
      delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    if (n == 2) {
      d_[0] = d_[1] = delta[0];
    } else {
      for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
          d_[i] = 0.0;
        } else {
          const double w1 = 2.0 * h[i] + h[i - 1];
          const double w2 = h[i] + 2.0 * h[i - 1];
          d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
      }
      d_[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
      d_[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }
  }

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

  double operator()(double x) const { return eval(x).first; }
  double derivative(double x) const { return eval(x).second; }

  // Value and first derivative of the interpolant (clamped to the end knots).
  std::pair<double, double> eval(double x) const {
    const std::size_t i = segment(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    // Cubic Hermite basis.
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    const double v = h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] +
                     h * h11 * d_[i + 1];
    const double dh00 = 6 * t2 - 6 * t;
    const double dh10 = 3 * t2 - 4 * t + 1;
    const double dh01 = -dh00;
    const double dh11 = 3 * t2 - 2 * t;
    const double dv = (dh00 * y_[i] + h * dh10 * d_[i] + dh01 * y_[i + 1] +
                       h * dh11 * d_[i + 1]) /
                      h;
    return {v, dv};
  }

 private:
  static double edge_slope(double h0, double h1, double del0, double del1) {
    // Non-centered three-point formula, clipped for shape preservation.
    double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if (d * del0 <= 0.0)
      d = 0.0;
    else if (del0 * del1 < 0.0 && std::abs(d) > 3.0 * std::abs(del0))
      d = 3.0 * del0;
    return d;
  }

  std::size_t segment(double x) const {
    if (x <= x_.front()) return 0;
    if (x >= x_.back()) return x_.size() - 2;
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
  }

  std::vector<double> x_, y_, d_;
};

}  // namespace riphawk::num
