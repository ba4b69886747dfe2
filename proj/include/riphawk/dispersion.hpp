#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riphawk/constants.hpp"
#include "riphawk/errors.hpp"
#include "riphawk/kinematics.hpp"
#include "riphawk/numerics/roots.hpp"
#include "riphawk/rip_profile.hpp"

namespace riphawk {

// Frequency-dependent background index n0(omega).
class MaterialModel {
 public:
  enum class Kind { constant, cauchy, single_resonance, multi_sellmeier };

  struct ConstantKind {
    double n0;
  };
  struct CauchyKind {
    double n0;  // dispersionless limit
    double B0;  // [s^2], > 0 for normal dispersion
  };
  struct SingleResonanceKind {
    double omega0;  // resonance frequency [rad/s]
    double omegac;  // coupling/plasma frequency [rad/s]
  };
  struct SellmeierTerm {
    double B;       // dimensionless strength
    double lambda;  // resonance wavelength [m]
  };
  struct MultiSellmeierKind {
    std::vector<SellmeierTerm> terms;
  };

  static MaterialModel constant(double n0, std::string name = "constant") {
    if (!(n0 >= 1.0)) throw domain_error("MaterialModel: n0 must be >= 1");
    return MaterialModel(ConstantKind{n0}, unbounded(), std::move(name));
  }

  static MaterialModel cauchy(double n0, double B0,
                              std::pair<double, double> validity = unbounded(),
                              std::string name = "cauchy") {
    if (!(n0 >= 1.0)) throw domain_error("MaterialModel: n0 must be >= 1");
    if (!(B0 > 0.0))
      throw domain_error("MaterialModel: Cauchy B0 must be positive");
    return MaterialModel(CauchyKind{n0, B0}, validity, std::move(name));
  }

  // Default validity stops below the resonance; the branch above omega_L has
  // n < 1 and is reachable through quartic_branches only.
  static MaterialModel single_resonance(
      double omega0, double omegac,
      std::optional<std::pair<double, double>> validity = std::nullopt,
      std::string name = "single_resonance") {
    if (!(omega0 > 0.0 && omegac > 0.0))
      throw domain_error("MaterialModel: omega0, omegac must be positive");
    auto v = validity.value_or(std::make_pair(0.0, 0.995 * omega0));
    return MaterialModel(SingleResonanceKind{omega0, omegac}, v,
                         std::move(name));
  }

  static MaterialModel multi_sellmeier(std::vector<SellmeierTerm> terms,
                                       std::pair<double, double> validity,
                                       std::string name = "multi_sellmeier") {
    if (terms.empty())
      throw domain_error("MaterialModel: need at least one Sellmeier term");
    return MaterialModel(MultiSellmeierKind{std::move(terms)}, validity,
                         std::move(name));
  }

  Kind kind() const { return static_cast<Kind>(kind_.index()); }
  const std::string& name() const { return name_; }
  std::pair<double, double> validity() const { return validity_; }

  const CauchyKind& cauchy_params() const {
    if (kind() != Kind::cauchy)
      throw domain_error("MaterialModel: not a Cauchy material");
    return std::get<CauchyKind>(kind_);
  }
  const SingleResonanceKind& resonance_params() const {
    if (kind() != Kind::single_resonance)
      throw domain_error("MaterialModel: not a single-resonance material");
    return std::get<SingleResonanceKind>(kind_);
  }

  bool in_validity(double omega) const {
    return omega >= validity_.first && omega <= validity_.second;
  }

  // n0(omega); throws outside the declared validity interval.
  double index(double omega) const {
    require_valid(omega);
    return index_unchecked(omega);
  }

  double dn_domega(double omega) const {
    require_valid(omega);
    return std::visit(
        [&](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, ConstantKind>) {
            return 0.0;
          } else if constexpr (std::is_same_v<K, CauchyKind>) {
            return 2.0 * k.B0 * omega;
          } else if constexpr (std::is_same_v<K, SingleResonanceKind>) {
            const double d = k.omega0 * k.omega0 - omega * omega;
            return omega * k.omegac * k.omegac /
                   (index_unchecked(omega) * d * d);
          } else {
            // dn/domega = -(lambda^2/(2 pi c)) dn/dlambda.
            const double lam = 2.0 * pi * c_light / omega;
            double dn2_dlam = 0.0;
            for (const auto& t : k.terms) {
              const double den = lam * lam - t.lambda * t.lambda;
              dn2_dlam += -2.0 * t.B * lam * t.lambda * t.lambda / (den * den);
            }
            const double dn_dlam = dn2_dlam / (2.0 * index_unchecked(omega));
            return -(lam * lam / (2.0 * pi * c_light)) * dn_dlam;
          }
        },
        kind_);
  }

  // Group index n_g = n + omega dn/domega (Cauchy: n0 + 3 B0 omega^2).
  double group_index(double omega) const {
    return index(omega) + omega * dn_domega(omega);
  }

  // v_g = c / n_g; anomalous n_g <= 0 is a domain error.
  double group_velocity(double omega) const {
    const double ng = group_index(omega);
    if (!(ng > 0.0))
      throw domain_error("MaterialModel: anomalous group index <= 0");
    return c_light / ng;
  }

 private:
  template <typename K>
  MaterialModel(K k, std::pair<double, double> validity, std::string name)
      : kind_(std::move(k)), validity_(validity), name_(std::move(name)) {}

  static std::pair<double, double> unbounded() {
    return {0.0, std::numeric_limits<double>::infinity()};
  }

  void require_valid(double omega) const {
    if (!(omega >= validity_.first && omega <= validity_.second))
      throw domain_error("MaterialModel '" + name_ +
                         "': omega outside the validity interval");
  }

  double index_unchecked(double omega) const {
    return std::visit(
        [&](const auto& k) -> double {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, ConstantKind>) {
            return k.n0;
          } else if constexpr (std::is_same_v<K, CauchyKind>) {
            return k.n0 + k.B0 * omega * omega;
          } else if constexpr (std::is_same_v<K, SingleResonanceKind>) {
            return std::sqrt(1.0 + k.omegac * k.omegac /
                                       (k.omega0 * k.omega0 - omega * omega));
          } else {
            const double lam = 2.0 * pi * c_light / omega;
            double n2 = 1.0;
            for (const auto& t : k.terms)
              n2 += t.B * lam * lam / (lam * lam - t.lambda * t.lambda);
            return std::sqrt(n2);
          }
        },
        kind_);
  }

  std::variant<ConstantKind, CauchyKind, SingleResonanceKind,
               MultiSellmeierKind>
      kind_;
  std::pair<double, double> validity_;
  std::string name_;
};

// Branches of the single-resonance dispersion relation at wavenumber k:
// omega^2_{+-} = [L +- sqrt(L^2 - 4 omega0^2 k^2 c^2)]/2, L = omegaL^2+k^2c^2.
// omega_- in [0, omega0), omega_+ >= omegaL; (omega0, omegaL) is forbidden.
inline std::pair<double, double> quartic_branches(const MaterialModel& material,
                                                  double k_mag) {
  if (!(k_mag >= 0.0)) throw domain_error("quartic_branches: k must be >= 0");
  const auto& r = material.resonance_params();
  const double w02 = r.omega0 * r.omega0;
  const double wL2 = w02 + r.omegac * r.omegac;
  const double kc2 = k_mag * c_light * k_mag * c_light;
  const double sum = wL2 + kc2;
  double disc = sum * sum - 4.0 * w02 * kc2;
  if (disc < 0.0) {
    if (disc < -1e-12 * sum * sum)
      throw internal_inconsistency_error(
          "quartic_branches: negative discriminant");
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  const double w_minus = std::sqrt(0.5 * (sum - root));
  const double w_plus = std::sqrt(0.5 * (sum + root));
  return {w_minus, w_plus};
}

// Dispersive index ansatz n(omega_l, u) = n0(omega_l) + eta I(gamma u);
// the perturbation itself carries no dispersion.
inline double dispersive_index(const MaterialModel& material,
                               const RipProfile& profile,
                               const FrameKinematics& kin, double omega_l,
                               double u) {
  return material.index(omega_l) +
         profile.eta() * profile.intensity(kin.gamma * u);
}

enum class WindowKind { phase, group };

// Half-open spectral window [omega_min, omega_max); the wavelength image is
// reversed, (lambda_min, lambda_max].
struct SpectralWindow {
  WindowKind kind = WindowKind::phase;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool empty = true;

  bool contains(double omega) const {
    return !empty && omega >= omega_min && omega < omega_max;
  }
};

namespace detail {

inline SpectralWindow make_window(WindowKind kind, double w_min, double w_max) {
  SpectralWindow w;
  w.kind = kind;
  if (!(w_max > w_min)) return w;
  w.empty = false;
  w.omega_min = w_min;
  w.omega_max = w_max;
  w.lambda_min = 2.0 * pi * c_light / w_max;
  w.lambda_max = (w_min > 0.0) ? 2.0 * pi * c_light / w_min
                               : std::numeric_limits<double>::infinity();
  return w;
}

// Window of the condition level_lo <= f(omega) < level_hi found by bracketed
// root-finding on the declared validity interval.  Works for non-monotone f
// (group indices dip at the zero-dispersion point); if several disjoint
// intervals satisfy the condition, the highest-frequency one is returned.
template <typename F>
SpectralWindow window_by_scan(WindowKind kind, F&& f, double lo, double hi,
                              double level_lo, double level_hi) {
  const int samples = 2048;
  std::vector<double> edges = {lo, hi};
  for (double level : {level_lo, level_hi}) {
    auto g = [&](double w) { return f(w) - level; };
    for (auto [a, b] : num::scan_brackets(g, lo, hi, samples))
      edges.push_back(a == b ? a : num::bisect(g, a, b, 0.0, 1e-13 * hi));
  }
  std::sort(edges.begin(), edges.end());
  double best_lo = 0.0, best_hi = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    if (!(b > a)) continue;
    const double v = f(0.5 * (a + b));
    if (v >= level_lo && v < level_hi && b > best_hi) {
      best_lo = a;
      best_hi = b;
    }
  }
  if (!(best_hi > best_lo)) return make_window(kind, 0.0, 0.0);
  return make_window(kind, best_lo, best_hi);
}

}  // namespace detail

// Lab-frame frequencies admitting a phase-velocity horizon,
// n0(omega) < c/v <= n0(omega) + eta.  Cauchy materials use the closed-form
// square-root bounds; other materials fall back to bracketed root-finding on
// the declared validity interval.
inline SpectralWindow phase_window_lab(const MaterialModel& material,
                                       double eta, const FrameKinematics& kin) {
  const double cv = kin.c_over_v();
  if (material.kind() == MaterialModel::Kind::cauchy) {
    const auto& ck = material.cauchy_params();
    if (cv <= ck.n0) return detail::make_window(WindowKind::phase, 0.0, 0.0);
    const double w_max = std::sqrt((cv - ck.n0) / ck.B0);
    const double w_min =
        (ck.n0 + eta < cv) ? std::sqrt((cv - ck.n0 - eta) / ck.B0) : 0.0;
    return detail::make_window(WindowKind::phase, w_min, w_max);
  }
  const auto [lo, hi] = material.validity();
  if (!std::isfinite(hi))
    throw domain_error("phase_window_lab: need a finite validity interval");
  return detail::window_by_scan(
      WindowKind::phase, [&](double w) { return material.index(w); },
      std::max(lo, 1e-3 * hi), hi, cv - eta, cv);
}

// Group-velocity horizon window, n_g(omega) in [c/v - eta, c/v).  For Cauchy
// materials every bound is the phase bound divided by sqrt(3).
inline SpectralWindow group_window_lab(const MaterialModel& material,
                                       double eta, const FrameKinematics& kin) {
  const double cv = kin.c_over_v();
  if (material.kind() == MaterialModel::Kind::cauchy) {
    const auto& ck = material.cauchy_params();
    if (cv <= ck.n0) return detail::make_window(WindowKind::group, 0.0, 0.0);
    const double w_max = std::sqrt((cv - ck.n0) / (3.0 * ck.B0));
    const double w_min =
        (ck.n0 + eta < cv) ? std::sqrt((cv - ck.n0 - eta) / (3.0 * ck.B0))
                           : 0.0;
    return detail::make_window(WindowKind::group, w_min, w_max);
  }
  const auto [lo, hi] = material.validity();
  if (!std::isfinite(hi))
    throw domain_error("group_window_lab: need a finite validity interval");
  return detail::window_by_scan(
      WindowKind::group, [&](double w) { return material.group_index(w); },
      std::max(lo, 1e-3 * hi), hi, cv - eta, cv);
}

// Phase and group horizons coexist iff eta >= (2/3)(c/v - n0) (Cauchy);
// general materials compare the windows directly.
inline bool horizons_coexist(const MaterialModel& material, double eta,
                             const FrameKinematics& kin) {
  if (material.kind() == MaterialModel::Kind::cauchy) {
    const double cv = kin.c_over_v();
    return eta >= (2.0 / 3.0) * (cv - material.cauchy_params().n0);
  }
  const SpectralWindow ph = phase_window_lab(material, eta, kin);
  const SpectralWindow gr = group_window_lab(material, eta, kin);
  return !ph.empty && !gr.empty && gr.omega_max >= ph.omega_min;
}

// One comoving-frame k_x interval supporting phase horizons.
struct KxWindow {
  double k_lo;
  double k_hi;
  bool positive_omega_l;  // the lab-frequency-positive branch
};

// Comoving k_x regions where a phase horizon exists: two disconnected
// intervals for n0 + eta < c/v (the positive one carries omega_l > 0), one
// connected symmetric interval otherwise.  Bounds are the lab window bounds
// divided by gamma v.
inline std::vector<KxWindow> comoving_kx_windows(const MaterialModel& material,
                                                 double eta,
                                                 const FrameKinematics& kin) {
  const auto& ck = material.cauchy_params();
  const double cv = kin.c_over_v();
  if (cv <= ck.n0) return {};
  const double gv = kin.gamma * kin.v;
  const double hi = std::sqrt(cv - ck.n0) / (gv * std::sqrt(ck.B0));
  if (ck.n0 + eta < cv) {
    const double lo = std::sqrt(cv - ck.n0 - eta) / (gv * std::sqrt(ck.B0));
    return {KxWindow{-hi, -lo, false}, KxWindow{lo, hi, true}};
  }
  return {KxWindow{-hi, hi, true}};
}

// One real root of a comoving dispersion branch.
struct BranchPoint {
  double omega;     // comoving frequency [rad/s]
  int branch;       // +1 or -1: the D_+ / D_- factor
  double v_group;   // domega/dk_x by implicit differentiation [m/s]
  double v_phase;   // omega/k_x [m/s]; meaningless when !v_phase_defined
  bool v_phase_defined;
};

namespace detail {

// D_s = 0 reduced in W = omega + v k_x:
//   B0 gamma^2 W^3 + (n + s v/c) W + s c k_x / gamma^2 = 0, s = +-1.
// With n >= 1 > v/c the linear coefficient is positive, so there is exactly
// one real root; the hyperbolic Cardano form is used, then one Newton polish.
inline double depressed_cubic_root(double a, double p, double q) {
  if (a == 0.0) return -q / p;
  const double pa = p / a, qa = q / a;
  const double t = std::sqrt(pa / 3.0);
  const double arg = 1.5 * (qa / pa) / t;
  double w = -2.0 * t * std::sinh(std::asinh(arg) / 3.0);
  for (int i = 0; i < 2; ++i) {
    const double f = a * w * w * w + p * w + q;
    const double fp = 3.0 * a * w * w + p;
    w -= f / fp;
  }
  return w;
}

}  // namespace detail

// Real roots (one per factor D_+, D_-) of the comoving dispersion relation at
// fixed k_x and position x, for the 2D reduction k_perp = 0.
inline std::vector<BranchPoint> comoving_branches(const MaterialModel& material,
                                                  const RipProfile& profile,
                                                  const FrameKinematics& kin,
                                                  double k_x, double x) {
  const auto& ck = material.cauchy_params();
  // Spatial part of the ansatz, n(x) = n0 + eta I(x), built on the material's
  // dispersionless base; the profile contributes the bump shape and eta.
  const double n = ck.n0 + profile.eta() * profile.intensity(x);
  const double g = kin.gamma, v = kin.v;
  const double a = ck.B0 * g * g;
  std::vector<BranchPoint> out;
  for (int s : {+1, -1}) {
    const double p = n + s * v / c_light;
    const double q = s * c_light * k_x / (g * g);
    const double W = detail::depressed_cubic_root(a, p, q);
    const double omega = W - v * k_x;
    const double G = n + 3.0 * ck.B0 * g * g * W * W;
    const double v_group = -(v * G + s * c_light) / (G + s * v / c_light);
    BranchPoint bp;
    bp.omega = omega;
    bp.branch = s;
    bp.v_group = v_group;
    bp.v_phase_defined = (k_x != 0.0);
    bp.v_phase = bp.v_phase_defined
                     ? omega / k_x
                     : std::numeric_limits<double>::quiet_NaN();
    out.push_back(bp);
  }
  return out;
}

// Stationary points of the D_- branch, k_x = -omega/v +- sqrt(c/v - n(x)) /
// (gamma v sqrt(3 B0)); complex (absent) wherever n(x) > c/v, which is how
// group-velocity horizons disappear inside a strong perturbation.
inline std::optional<std::pair<double, double>> group_horizon_kx(
    const MaterialModel& material, const RipProfile& profile,
    const FrameKinematics& kin, double omega, double x) {
  const auto& ck = material.cauchy_params();
  const double n = ck.n0 + profile.eta() * profile.intensity(x);
  const double cv = kin.c_over_v();
  const double radicand = cv - n;
  if (radicand < 0.0) return std::nullopt;
  const double spread =
      std::sqrt(radicand) / (kin.gamma * kin.v * std::sqrt(3.0 * ck.B0));
  return std::make_pair(-omega / kin.v - spread, -omega / kin.v + spread);
}

}  // namespace riphawk
