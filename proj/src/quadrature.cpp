#include "membrane/quadrature.hpp"

#include <cmath>

namespace membrane {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1,1].
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double gap;  // |kronrod - gauss|
};

Panel gk15(const std::function<double(double)>& f, double a, double b,
           int& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = kWgk[7] * f(c);
  double resg = kWg[3] * f(c);
  evals += 1;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    evals += 2;
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

void refine(const std::function<double(double)>& f, double a, double b,
            double tol, int depth, int max_depth, QuadratureResult& out) {
  Panel p = gk15(f, a, b, out.evaluations);
  if (p.gap <= tol || depth >= max_depth) {
    out.value += p.kronrod;
    out.error_estimate += p.gap;
    if (p.gap > tol) out.converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  refine(f, a, m, 0.5 * tol, depth + 1, max_depth, out);
  refine(f, m, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  refine(f, a, b, abs_tol, 0, max_depth, out);
  return out;
}

}  // namespace membrane
