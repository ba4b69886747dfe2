#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "riphawk/errors.hpp"

namespace riphawk::num {

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
inline constexpr double gk15_node[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double g7_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline double mag(double x) { return std::abs(x); }
inline double mag(const std::complex<double>& x) { return std::abs(x); }

template <typename F, typename V>
void gk15_panel(F& f, double a, double b, V& kronrod, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  V fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[2 * i] = f(c - h * gk15_node[i]);
    fv[2 * i + 1] = f(c + h * gk15_node[i]);
  }
  fv[14] = f(c);
  V k = gk15_wk[7] * fv[14];
  for (int i = 0; i < 7; ++i) k += gk15_wk[i] * (fv[2 * i] + fv[2 * i + 1]);
  // Gauss nodes are the odd Kronrod nodes (indices 1, 3, 5) plus the center.
  V g = g7_w[3] * fv[14];
  for (int i = 0; i < 3; ++i)
    g += g7_w[i] * (fv[2 * (2 * i + 1)] + fv[2 * (2 * i + 1) + 1]);
  kronrod = h * k;
  err = mag(h * (k - g));
  // Scaled error estimate as in QUADPACK.
  const double scale = mag(kronrod);
  if (scale > 0.0 && err > 0.0) {
    const double r = std::pow(200.0 * err / scale, 1.5);
    if (r < 1.0) err = scale * r;
  }
}

}  // namespace detail

template <typename V>
struct QuadResult {
  V value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].  V may be double or complex<double>.
// Throws quadrature_error when the evaluation budget runs out before the
// requested tolerance is met.
template <typename V = double, typename F>
QuadResult<V> integrate(F&& f, double a, double b, double rel_tol = 1e-12,
                        double abs_tol = 0.0,
                        std::size_t max_evaluations = 1u << 20) {
  struct Panel {
    double a, b, err;
    V val;
  };
  QuadResult<V> res;
  Panel first{a, b, 0.0, V{}};
  detail::gk15_panel(f, a, b, first.val, first.err);
  res.evaluations = 15;

  std::vector<Panel> panels{first};
  // Keep splitting the worst panel until the summed error is small enough.
  for (;;) {
    V total{};
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].val;
      err += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    const double goal =
        std::max(abs_tol, rel_tol * std::max(detail::mag(total), 1e-300));
    if (err <= goal) {
      res.value = total;
      res.error = err;
      return res;
    }
    if (res.evaluations + 30 > max_evaluations)
      throw quadrature_error("adaptive Gauss-Kronrod: evaluation budget exhausted");
    Panel& w = panels[worst];
    const double mid = 0.5 * (w.a + w.b);
    Panel left{w.a, mid, 0.0, V{}};
    Panel right{mid, w.b, 0.0, V{}};
    detail::gk15_panel(f, left.a, left.b, left.val, left.err);
    detail::gk15_panel(f, right.a, right.b, right.val, right.err);
    res.evaluations += 30;
    w = left;
    panels.push_back(right);
  }
}

}  // namespace riphawk::num
