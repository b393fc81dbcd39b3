#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace membrane {

template <std::size_t N>
using OdeVec = std::array<double, N>;

// One accepted step with interpolation coefficients. The quartic interpolant
// reproduces the step-end values exactly and the step-end derivatives of the
// underlying pair (Hermite at both ends).
template <std::size_t N>
struct DenseStep {
  double t0 = 0.0;
  double h = 0.0;
  OdeVec<N> r1{}, r2{}, r3{}, r4{}, r5{};

  OdeVec<N> eval(double t) const {
    const double s = (t - t0) / h;
    const double s1 = 1.0 - s;
    OdeVec<N> y{};
    for (std::size_t i = 0; i < N; ++i) {
      y[i] = r1[i] + s * (r2[i] + s1 * (r3[i] + s * (r4[i] + s1 * r5[i])));
    }
    return y;
  }

  OdeVec<N> eval_derivative(double t) const {
    const double s = (t - t0) / h;
    OdeVec<N> d{};
    for (std::size_t i = 0; i < N; ++i) {
      d[i] = (r2[i] + (1.0 - 2.0 * s) * r3[i] + s * (2.0 - 3.0 * s) * r4[i] +
              2.0 * s * (1.0 - s) * (1.0 - 2.0 * s) * r5[i]) /
             h;
    }
    return d;
  }
};

template <std::size_t N>
struct OdeSolution {
  std::vector<DenseStep<N>> steps;
  double t_end = 0.0;
  OdeVec<N> y_end{};
  int accepted = 0;
  int rejected = 0;
  bool event_hit = false;
  bool singular = false;  // step size collapsed; y_end is the last valid state

  // interpolated state anywhere inside the covered span
  OdeVec<N> eval(double t) const {
    return step_at(t).eval(t);
  }
  OdeVec<N> eval_derivative(double t) const {
    return step_at(t).eval_derivative(t);
  }

 private:
  const DenseStep<N>& step_at(double t) const {
    // steps are contiguous and monotone in t0; pick the covering one
    std::size_t lo = 0, hi = steps.size();
    const double dir = steps.back().h > 0 ? 1.0 : -1.0;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if ((t - steps[mid].t0) * dir >= 0.0) lo = mid; else hi = mid;
    }
    return steps[lo];
  }
};

namespace dopri5_detail {

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                 a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                 c5 = 8.0 / 9.0;
// difference between the 5th- and 4th-order weights
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                 e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// dense-output weights
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

template <std::size_t N, class Rhs>
bool try_step(Rhs& rhs, double t, const OdeVec<N>& y, const OdeVec<N>& k1,
              double h, OdeVec<N>& y_new, OdeVec<N>& k7, OdeVec<N>& err,
              DenseStep<N>& dense) {
  OdeVec<N> k2, k3, k4, k5, k6, tmp;
  auto stage = [&](double c, const OdeVec<N>& incr, OdeVec<N>& out) -> bool {
    out = rhs(t + c * h, incr);
    for (std::size_t i = 0; i < N; ++i) {
      if (!std::isfinite(out[i])) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
  if (!stage(c2, tmp, k2)) return false;
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  if (!stage(c3, tmp, k3)) return false;
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  if (!stage(c4, tmp, k4)) return false;
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  if (!stage(c5, tmp, k5)) return false;
  for (std::size_t i = 0; i < N; ++i)
    tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                         a64 * k4[i] + a65 * k5[i]);
  if (!stage(1.0, tmp, k6)) return false;
  for (std::size_t i = 0; i < N; ++i)
    y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                           b6 * k6[i]);
  if (!stage(1.0, y_new, k7)) return false;
  for (std::size_t i = 0; i < N; ++i)
    err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                  e6 * k6[i] + e7 * k7[i]);

  dense.t0 = t;
  dense.h = h;
  for (std::size_t i = 0; i < N; ++i) {
    const double ydiff = y_new[i] - y[i];
    const double bspl = h * k1[i] - ydiff;
    dense.r1[i] = y[i];
    dense.r2[i] = ydiff;
    dense.r3[i] = bspl;
    dense.r4[i] = ydiff - h * k7[i] - bspl;
    dense.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                       d6 * k6[i] + d7 * k7[i]);
  }
  return true;
}

}  // namespace dopri5_detail

// Adaptive integration of y' = rhs(t, y) from t0 to t1 (either direction).
// The rhs may throw or return non-finite values; such steps are rejected and
// retried with a smaller h until the step size collapses (singular flag).
// An optional terminal event stops the run where `event` first becomes <= 0,
// located on the interpolant to within event_t_tol in t.
template <std::size_t N, class Rhs>
OdeSolution<N> integrate_dopri5(
    Rhs rhs, double t0, OdeVec<N> y0, double t1, double tol,
    const std::function<double(double, const OdeVec<N>&)>& event = {},
    double event_t_tol = 1e-10) {
  using namespace dopri5_detail;
  OdeSolution<N> sol;
  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double t = t0;
  OdeVec<N> y = y0;
  OdeVec<N> k1 = rhs(t, y);
  double h = dir * std::max(1e-10, 0.01 * span);
  double g_prev = event ? event(t, y) : 1.0;

  for (int iter = 0; iter < 1000000; ++iter) {
    if ((t - t1) * dir >= 0.0) break;
    if (std::abs(h) > std::abs(t1 - t)) h = t1 - t;

    OdeVec<N> y_new, k7, err;
    DenseStep<N> dense;
    bool ok = false;
    try {
      ok = try_step(rhs, t, y, k1, h, y_new, k7, err, dense);
    } catch (...) {
      ok = false;
    }

    double err_norm = 0.0;
    if (ok) {
      for (std::size_t i = 0; i < N; ++i) {
        const double sc =
            tol + tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        const double q = err[i] / sc;
        err_norm += q * q;
      }
      err_norm = std::sqrt(err_norm / N);
      if (!std::isfinite(err_norm)) ok = false;
    }

    if (!ok) {
      sol.rejected += 1;
      h *= 0.5;
      if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
        sol.singular = true;
        break;
      }
      continue;
    }

    if (err_norm <= 1.0) {
      sol.accepted += 1;
      sol.steps.push_back(dense);
      t += h;
      y = y_new;
      k1 = k7;  // first-same-as-last

      if (event) {
        const double g_now = event(t, y);
        if (g_now <= 0.0 && g_prev > 0.0) {
          // bisect the interpolant for the crossing
          double lo = dense.t0, hi = t;
          while (std::abs(hi - lo) > event_t_tol) {
            const double mid = 0.5 * (lo + hi);
            if (event(mid, dense.eval(mid)) > 0.0) lo = mid; else hi = mid;
          }
          sol.event_hit = true;
          sol.t_end = hi;
          sol.y_end = dense.eval(hi);
          return sol;
        }
        g_prev = g_now;
      }

      const double fac = (err_norm == 0.0)
                             ? 5.0
                             : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2,
                                          5.0);
      h *= fac;
    } else {
      sol.rejected += 1;
      h *= std::max(0.2, std::min(1.0, 0.9 * std::pow(err_norm, -0.2)));
      if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
        sol.singular = true;
        break;
      }
    }
  }

  sol.t_end = t;
  sol.y_end = y;
  return sol;
}

// Fixed-step variant: n equal steps, no error control. Used to measure the
// method's convergence order directly.
template <std::size_t N, class Rhs>
OdeSolution<N> integrate_dopri5_fixed(Rhs rhs, double t0, OdeVec<N> y0,
                                      double t1, int n_steps) {
  using namespace dopri5_detail;
  OdeSolution<N> sol;
  const double h = (t1 - t0) / n_steps;
  double t = t0;
  OdeVec<N> y = y0;
  OdeVec<N> k1 = rhs(t, y);
  for (int i = 0; i < n_steps; ++i) {
    OdeVec<N> y_new, k7, err;
    DenseStep<N> dense;
    if (!try_step(rhs, t, y, k1, h, y_new, k7, err, dense)) {
      sol.singular = true;
      break;
    }
    sol.accepted += 1;
    sol.steps.push_back(dense);
    t = t0 + (i + 1) * h;
    y = y_new;
    k1 = k7;
  }
  sol.t_end = t;
  sol.y_end = y;
  return sol;
}

}  // namespace membrane
