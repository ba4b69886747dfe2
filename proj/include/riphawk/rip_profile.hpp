#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riphawk/errors.hpp"
#include "riphawk/numerics/pchip.hpp"
#include "riphawk/numerics/roots.hpp"

namespace riphawk {

struct GaussianShape {
  double sigma;  // [m]
};

// H(x) = 1 + tanh((sigma+x)/delta_wh) tanh((sigma-x)/delta_bh), normalized by
// its maximum.  delta_* set the edge thicknesses, 2 sigma the overall extent.
struct ShockwaveShape {
  double sigma;     // [m]
  double delta_wh;  // trailing-edge thickness [m]
  double delta_bh;  // leading-edge thickness [m]
  double x_max;     // argmax of H, located numerically
  double h_max;     // max H, in (1, 2]
};

struct TabulatedShape {
  num::Pchip intensity;  // normalized to peak 1
  double x_peak;
  bool single_peaked;
};

// Refractive-index perturbation n(x) = n0 + eta * I(x) with 0 <= I <= 1,
// sup I = 1, and an analytic derivative for each shape.
class RipProfile {
 public:
  enum class Kind { gaussian, shockwave, tabulated };

  static RipProfile gaussian(double n0, double eta, double sigma) {
    check_common(n0, eta);
    if (!(sigma > 0.0)) throw domain_error("RipProfile: sigma must be positive");
    return RipProfile(n0, eta, GaussianShape{sigma});
  }

  static RipProfile shockwave(double n0, double eta, double sigma,
                              double delta_wh, double delta_bh) {
    check_common(n0, eta);
    if (!(sigma > 0.0 && delta_wh > 0.0 && delta_bh > 0.0))
      throw domain_error("RipProfile: sigma, delta_wh, delta_bh must be positive");
    auto [x_max, h_max] = shock_unnormalized_max(sigma, delta_wh, delta_bh);
    return RipProfile(n0, eta,
                      ShockwaveShape{sigma, delta_wh, delta_bh, x_max, h_max});
  }

  // Samples are sorted by x and intensities rescaled so the peak is exactly 1.
  static RipProfile tabulated(double n0, double eta, std::vector<double> x,
                              std::vector<double> intensity) {
    check_common(n0, eta);
    if (x.size() != intensity.size() || x.size() < 4)
      throw domain_error("RipProfile: tabulated profile needs >= 4 samples");
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> xs(x.size()), ys(x.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      xs[i] = x[order[i]];
      ys[i] = intensity[order[i]];
    }
    const double peak = *std::max_element(ys.begin(), ys.end());
    if (!(peak > 0.0))
      throw domain_error("RipProfile: tabulated intensity must have a positive peak");
    for (double& v : ys) v /= peak;
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < ys.size(); ++i)
      if (ys[i] > ys[i - 1] && ys[i] >= ys[i + 1]) ++maxima;
    return RipProfile(n0, eta,
                      TabulatedShape{num::Pchip(std::move(xs), std::move(ys)),
                                     /*x_peak: located in the ctor*/ 0.0,
                                     maxima <= 1});
  }

  // Two-column CSV (x_meters, intensity); header line optional.
  static RipProfile tabulated_csv(double n0, double eta,
                                  const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open profile CSV: " + path);
    std::vector<double> xs, ys;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      for (char& ch : line)
        if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
      std::istringstream ss(line);
      double a, b;
      if (ss >> a >> b) {
        xs.push_back(a);
        ys.push_back(b);
      } else if (!xs.empty()) {
        throw config_error("malformed line in profile CSV: " + path);
      }
      // A non-numeric first line is treated as a header and skipped.
    }
    return tabulated(n0, eta, std::move(xs), std::move(ys));
  }

  double n0() const { return n0_; }
  double eta() const { return eta_; }
  Kind kind() const { return static_cast<Kind>(shape_.index()); }
  bool analytic() const { return kind() != Kind::tabulated; }

  const ShockwaveShape& shock() const {
    if (kind() != Kind::shockwave)
      throw domain_error("RipProfile: not a shockwave profile");
    return std::get<ShockwaveShape>(shape_);
  }
  const GaussianShape& gauss() const {
    if (kind() != Kind::gaussian)
      throw domain_error("RipProfile: not a Gaussian profile");
    return std::get<GaussianShape>(shape_);
  }

  // Normalized intensity, in [0, 1].
  double intensity(double x) const {
    return std::visit(
        [&](const auto& s) -> double {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GaussianShape>) {
            const double t = x / s.sigma;
            return std::exp(-0.5 * t * t);
          } else if constexpr (std::is_same_v<S, ShockwaveShape>) {
            return shock_h(s, x) / s.h_max;
          } else {
            if (x < s.intensity.x_front() || x > s.intensity.x_back())
              return 0.0;  // decaying-tail extrapolation
            return s.intensity(x);
          }
        },
        shape_);
  }

  // d intensity / dx, from the closed-form derivative of the shape.
  double intensity_dx(double x) const {
    return std::visit(
        [&](const auto& s) -> double {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GaussianShape>) {
            const double t = x / s.sigma;
            return -(x / (s.sigma * s.sigma)) * std::exp(-0.5 * t * t);
          } else if constexpr (std::is_same_v<S, ShockwaveShape>) {
            return shock_h_dx(s, x) / s.h_max;
          } else {
            if (x < s.intensity.x_front() || x > s.intensity.x_back())
              return 0.0;
            return s.intensity.derivative(x);
          }
        },
        shape_);
  }

  double refractive_index(double x) const { return n0_ + eta_ * intensity(x); }
  double dn_dx(double x) const { return eta_ * intensity_dx(x); }

  // Interval outside which the intensity is negligible; root scans use it.
  std::pair<double, double> support() const {
    return std::visit(
        [&](const auto& s) -> std::pair<double, double> {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GaussianShape>)
            return {-8.0 * s.sigma, 8.0 * s.sigma};
          else if constexpr (std::is_same_v<S, ShockwaveShape>)
            return {-(s.sigma + 12.0 * s.delta_wh),
                    s.sigma + 12.0 * s.delta_bh};
          else
            return {s.intensity.x_front(), s.intensity.x_back()};
        },
        shape_);
  }

  // Argmax of the intensity.
  double center() const {
    return std::visit(
        [&](const auto& s) -> double {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GaussianShape>)
            return 0.0;
          else if constexpr (std::is_same_v<S, ShockwaveShape>)
            return s.x_max;
          else
            return s.x_peak;
        },
        shape_);
  }

  // Taylor coefficients of t -> I(x0 + scale * t) about t = 0, terms
  // 0..m_count-1.  Exact recurrences from the defining ODEs of each analytic
  // shape (Gaussian y' = -(x/sigma^2) y, tanh y' = (1 - y^2)/delta); the
  // scale keeps coefficients bounded for high orders.
  std::vector<double> intensity_taylor(double x0, double scale,
                                       int m_count) const {
    if (m_count < 1) throw domain_error("intensity_taylor: need m_count >= 1");
    return std::visit(
        [&](const auto& s) -> std::vector<double> {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, GaussianShape>) {
            // y(t) = exp(-(x0+scale t)^2/(2 sigma^2)):
            // y' = -(scale/sigma^2)(x0 + scale t) y.
            std::vector<double> y(m_count);
            const double inv_s2 = 1.0 / (s.sigma * s.sigma);
            y[0] = std::exp(-0.5 * x0 * x0 * inv_s2);
            for (int m = 0; m + 1 < m_count; ++m) {
              double rhs = -inv_s2 * scale * x0 * y[m];
              if (m >= 1) rhs -= inv_s2 * scale * scale * y[m - 1];
              y[m + 1] = rhs / (m + 1);
            }
            return y;
          } else if constexpr (std::is_same_v<S, ShockwaveShape>) {
            const auto p = tanh_taylor((s.sigma + x0) / s.delta_wh,
                                       scale / s.delta_wh, m_count);
            const auto q = tanh_taylor((s.sigma - x0) / s.delta_bh,
                                       -scale / s.delta_bh, m_count);
            std::vector<double> h(m_count, 0.0);
            for (int m = 0; m < m_count; ++m)
              for (int i = 0; i <= m; ++i) h[m] += p[i] * q[m - i];
            h[0] += 1.0;
            for (double& v : h) v /= s.h_max;
            return h;
          } else {
            throw domain_error(
                "intensity_taylor: tabulated profiles are not analytic");
          }
        },
        shape_);
  }

  // Non-fatal shape diagnostics (the single-peak requirement is only verified
  // for the Gaussian; shockwave plateaus are effectively flat-topped).
  std::vector<std::string> validate() const {
    std::vector<std::string> warnings;
    if (kind() == Kind::shockwave) {
      warnings.push_back(
          "shockwave profile: single-maximum property not checked "
          "(plateau may be flat to machine precision)");
    } else if (kind() == Kind::tabulated) {
      const auto& s = std::get<TabulatedShape>(shape_);
      if (!s.single_peaked)
        warnings.push_back("tabulated profile: multiple local maxima detected");
      const double lo = intensity(s.intensity.x_front());
      const double hi = intensity(s.intensity.x_back());
      if (lo > 0.05 || hi > 0.05)
        warnings.push_back("tabulated profile: tails do not decay toward zero");
    }
    return warnings;
  }

  // Argmax and maximum of the unnormalized H(x), by golden-section search on
  // [-sigma-10 delta_wh, sigma+10 delta_bh].  There is no closed form when
  // delta_wh != delta_bh.
  static std::pair<double, double> shock_unnormalized_max(double sigma,
                                                          double delta_wh,
                                                          double delta_bh) {
    const double lo = -sigma - 10.0 * delta_wh;
    const double hi = sigma + 10.0 * delta_bh;
    ShockwaveShape tmp{sigma, delta_wh, delta_bh, 0.0, 1.0};
    auto h = [&](double x) { return shock_h(tmp, x); };
    // Coarse seed keeps golden off the wrong side of asymmetric profiles.
    const int nseed = 257;
    double best_x = lo, best_h = h(lo);
    for (int i = 1; i < nseed; ++i) {
      const double x = lo + (hi - lo) * i / (nseed - 1.0);
      const double v = h(x);
      if (v > best_h) {
        best_h = v;
        best_x = x;
      }
    }
    const double w = (hi - lo) / (nseed - 1.0);
    auto [xm, hm] = num::golden_max(h, best_x - w, best_x + w,
                                    1e-13 * (sigma + delta_wh + delta_bh));
    return {xm, hm};
  }

 private:
  template <typename ShapeT>
  RipProfile(double n0, double eta, ShapeT shape)
      : n0_(n0), eta_(eta), shape_(std::move(shape)) {
    if (kind() == Kind::tabulated) {
      auto& s = std::get<TabulatedShape>(shape_);
      auto [xm, im] = num::golden_max(
          [&](double x) { return s.intensity(x); }, s.intensity.x_front(),
          s.intensity.x_back(),
          1e-12 * (s.intensity.x_back() - s.intensity.x_front()));
      (void)im;
      s.x_peak = xm;
    }
  }

  static void check_common(double n0, double eta) {
    if (!(n0 >= 1.0)) throw domain_error("RipProfile: n0 must be >= 1");
    if (!(eta > 0.0)) throw domain_error("RipProfile: eta must be positive");
  }

  static double shock_h(const ShockwaveShape& s, double x) {
    return 1.0 + std::tanh((s.sigma + x) / s.delta_wh) *
                     std::tanh((s.sigma - x) / s.delta_bh);
  }

  static double shock_h_dx(const ShockwaveShape& s, double x) {
    const double a = (s.sigma + x) / s.delta_wh;
    const double b = (s.sigma - x) / s.delta_bh;
    const double ta = std::tanh(a), tb = std::tanh(b);
    const double sa = 1.0 - ta * ta, sb = 1.0 - tb * tb;
    return sa * tb / s.delta_wh - ta * sb / s.delta_bh;
  }

  // Taylor coefficients of tanh(z0 + slope * t) in t about 0, from
  // y' = slope (1 - y^2).
  static std::vector<double> tanh_taylor(double z0, double slope, int m_count) {
    std::vector<double> y(m_count);
    y[0] = std::tanh(z0);
    for (int m = 0; m + 1 < m_count; ++m) {
      double sq = 0.0;
      for (int i = 0; i <= m; ++i) sq += y[i] * y[m - i];
      const double delta0 = (m == 0) ? 1.0 : 0.0;
      y[m + 1] = slope * (delta0 - sq) / (m + 1);
    }
    return y;
  }

  double n0_;
  double eta_;
  std::variant<GaussianShape, ShockwaveShape, TabulatedShape> shape_;
};

// Argmax and maximum of the shockwave bump H(x); H_max is in (1, 2].
inline std::pair<double, double> shock_max(const RipProfile& profile) {
  const auto& s = profile.shock();
  return {s.x_max, s.h_max};
}

}  // namespace riphawk
