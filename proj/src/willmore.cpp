#include "membrane/willmore.hpp"

#include <cmath>
#include <vector>

#include "membrane/quadrature.hpp"
#include "membrane/shape_eq.hpp"
#include "membrane/stress.hpp"

namespace membrane {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double first_integral(const State& state) {
  const double C = std::cos(state.psi);
  if (std::abs(C) < kChartCosMin) {
    throw SingularStateError("first_integral: cos(psi) ~ 0", state);
  }
  const double S = std::sin(state.psi);
  return state.rho * state.rho * C * state.psi_p * state.psi_p - S * S / C;
}

double radicand(double I, double psi) {
  const double s = std::sin(psi);
  return I * std::cos(psi) + s * s;
}

BranchDomain branch_domain(double I) {
  // window around psi = pi/2; the radicand equals 1 there for every I
  const double lo_edge = -0.5 * kPi;
  const double hi_edge = kPi;
  BranchDomain dom{lo_edge, hi_edge, false};
  if (I == 0.0) {
    // the radicand sin^2 touches zero at 0 and pi without a sign change
    dom.psi_lo = 0.0;
    dom.psi_hi = kPi;
    return dom;
  }

  auto g = [I](double psi) { return radicand(I, psi); };
  auto bisect = [&](double a, double b) {
    // g(a), g(b) have opposite signs
    for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
      const double m = 0.5 * (a + b);
      if ((g(a) > 0.0) == (g(m) > 0.0)) a = m; else b = m;
    }
    return 0.5 * (a + b);
  };

  const int n = 20000;
  std::vector<double> roots;
  double prev_x = lo_edge + 1e-9;
  double prev_g = g(prev_x);
  for (int i = 1; i <= n; ++i) {
    const double x = lo_edge + 1e-9 + (hi_edge - 1e-9 - (lo_edge + 1e-9)) *
                                          static_cast<double>(i) / n;
    const double gx = g(x);
    if ((gx > 0.0) != (prev_g > 0.0)) roots.push_back(bisect(prev_x, x));
    prev_x = x;
    prev_g = gx;
  }

  const double mid = 0.5 * kPi;
  if (g(mid) <= 0.0) {
    dom.empty = true;  // cannot happen for real I; kept for robustness
    return dom;
  }
  for (double r : roots) {
    if (r < mid && r > dom.psi_lo) dom.psi_lo = r;
    if (r > mid && r < dom.psi_hi) dom.psi_hi = r;
  }
  return dom;
}

namespace {

// int_{a}^{b} cos/sqrt(g), adaptive
double exponent_integral(double I, double a, double b) {
  auto f = [I](double psi) {
    return std::cos(psi) / std::sqrt(radicand(I, psi));
  };
  return integrate_adaptive(f, a, b, 1e-12).value;
}

}  // namespace

Profile quadrature_profile(double I, double rho0, int sign,
                           std::pair<double, double> psi_range, int n) {
  if (n < 2) throw DomainError("quadrature_profile: need n >= 2");
  if (sign != 1 && sign != -1) {
    throw DomainError("quadrature_profile: sign must be +1 or -1");
  }
  const BranchDomain dom = branch_domain(I);
  const double lo = std::min(psi_range.first, psi_range.second);
  const double hi = std::max(psi_range.first, psi_range.second);
  if (dom.empty || lo < dom.psi_lo - 1e-12 || hi > dom.psi_hi + 1e-12 ||
      radicand(I, lo) <= 0.0 || radicand(I, hi) <= 0.0) {
    throw DomainError("quadrature_profile: psi_range leaves the branch domain");
  }

  const double s = static_cast<double>(sign);
  Profile prof;
  prof.chart = Chart::Psi;
  prof.params = reduced_params(0.0, 0.0, 0.0, 0.0);
  prof.branch_sign = sign;
  prof.rho0 = rho0;
  prof.termination = Termination::SpanEnd;
  prof.tol = 1e-12;
  prof.points.resize(n);

  const double a = psi_range.first;
  const double b = psi_range.second;
  double z = 0.0;
  double prev_psi = 0.0, prev_rho = 0.0;
  for (int i = 0; i < n; ++i) {
    const double psi = a + (b - a) * static_cast<double>(i) / (n - 1);
    const double E = exponent_integral(I, 0.5 * kPi, psi);
    const double rho = rho0 * std::exp(-s * E);
    const double g = radicand(I, psi);
    const double sg = std::sqrt(g);
    const double C = std::cos(psi);
    const double S = std::sin(psi);

    if (i > 0) {
      // z increment: dz/dpsi = -s rho(phi) sin(phi)/sqrt(g); rho inside the
      // panel is rebuilt from the left node by a nested quadrature
      const double pl = prev_psi, rl = prev_rho;
      auto fz = [&](double phi) {
        const double e = exponent_integral(I, pl, phi);
        return -s * rl * std::exp(-s * e) * std::sin(phi) /
               std::sqrt(radicand(I, phi));
      };
      z += integrate_adaptive(fz, pl, psi, 1e-13).value;
    }

    ProfilePoint& pt = prof.points[i];
    pt.t = psi;
    pt.rho = rho;
    pt.psi = psi;
    pt.z = z;
    pt.I = I;
    if (std::abs(C) >= kChartCosMin) {
      const double psi_p = -s * sg / (rho * C);
      pt.dpsi = psi_p;
      // psi'' from differentiating the first-order form along the branch
      const double psi_pp = (-s * S * (2.0 * C - I) * psi_p / (2.0 * sg) -
                             C * psi_p + rho * S * psi_p * psi_p) /
                            (rho * C);
      pt.omega_eff = omega_effective(Jet2{rho, psi, psi_p, psi_pp},
                                     prof.params);
      pt.Q_scale = scale_charge_closed(State{rho, psi, psi_p, z}, 0.0,
                                       prof.params.kc)
                       .Q;
    }
    prev_psi = psi;
    prev_rho = rho;
  }
  return prof;
}

double residual_first_order(const State& state, double I, int sign) {
  const double g = radicand(I, state.psi);
  if (g < 0.0) throw DomainError("residual_first_order: negative radicand");
  return state.rho * std::cos(state.psi) * state.psi_p +
         static_cast<double>(sign) * std::sqrt(g);
}

double residual_graph(double rho, double z_p, double z_pp, double I, int sign) {
  const double w = std::sqrt(z_p * z_p + 1.0);
  const double inner = z_p * z_p + I * w;
  if (inner < 0.0) throw DomainError("residual_graph: negative inner radicand");
  return z_pp - static_cast<double>(sign) * (z_p * z_p + 1.0) *
                    std::sqrt(inner) / rho;
}

}  // namespace membrane
