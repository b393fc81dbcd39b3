#include "membrane/shape_eq.hpp"

#include <cmath>

#include "membrane/ode.hpp"
#include "membrane/stress.hpp"
#include "membrane/willmore.hpp"

namespace membrane {

double residual_general(double two_H, double K, double lap_H,
                        const ModelParams& params) {
  const double m = two_H + params.c0;
  return 2.0 * params.kc * lap_H +
         params.kc * m * (0.5 * two_H * two_H - 2.0 * K -
                          0.5 * params.c0 * two_H) -
         params.lambda_phys * two_H + params.p_phys;
}

double residual_third_order(const Jet3& jet, const ModelParams& params) {
  if (jet.rho < 1e-12 || std::abs(std::cos(jet.psi)) < kChartCosMin) {
    throw SingularStateError("residual_third_order: chart degenerates", jet.jet2().state());
  }
  const double r = jet.rho;
  const double C = std::cos(jet.psi);
  const double S = std::sin(jet.psi);
  const double p1 = jet.psi_p, p2 = jet.psi_pp, p3 = jet.psi_ppp;

  // u = sin(psi)/rho + cos(psi) psi' and its first two rho-derivatives
  const double u = S / r + C * p1;
  const double up = C * p1 / r - S / (r * r) - S * p1 * p1 + C * p2;
  const double upp = C * p2 / r - S * p1 * p1 / r - 2.0 * C * p1 / (r * r) +
                     2.0 * S / (r * r * r) - C * p1 * p1 * p1 -
                     3.0 * S * p1 * p2 + C * p3;

  return -(C / r) * (C * up - r * S * p1 * up + r * C * upp) -
         0.5 * u * u * u + 2.0 * S * C * p1 * u / r -
         2.0 * params.c0 * S * C * p1 / r + params.lambda_t * u + params.p_t;
}

double residual_integrated(const Jet2& jet, const ModelParams& params) {
  const double r = jet.rho;
  const double C = std::cos(jet.psi);
  const double S = std::sin(jet.psi);
  const double p1 = jet.psi_p;
  return r * C * C * C * jet.psi_pp - 0.5 * r * C * C * S * p1 * p1 +
         C * C * C * p1 + S * S * S / (2.0 * r) + params.c0 * S * S -
         (params.lambda_t * r * r + 1.0) * S / r -
         0.5 * params.p_t * r * r + params.omega0;
}

double solve_psi_pp(const State& state, const ModelParams& params) {
  const double C = std::cos(state.psi);
  if (std::abs(C) < kChartCosMin || state.rho < 1e-12) {
    throw SingularStateError("solve_psi_pp: rho cos^3(psi) too small", state);
  }
  Jet2 jet = Jet2::of(state, 0.0);
  const double rest = residual_integrated(jet, params);
  return -rest / (state.rho * C * C * C);
}

double omega_effective(const Jet2& jet,
                       const ModelParams& params_without_omega) {
  ModelParams p = params_without_omega;
  p.omega0 = 0.0;
  return -residual_integrated(jet, p);
}

namespace {

struct ShapeRhs {
  ModelParams params;
  OdeVec<3> operator()(double rho, const OdeVec<3>& y) const {
    const double psi_pp = solve_psi_pp(State{rho, y[0], y[1]}, params);
    return {y[1], psi_pp, std::tan(y[0])};
  }
};

ProfilePoint make_point(double rho, const OdeVec<3>& y, double psi_pp,
                        const ModelParams& params) {
  ProfilePoint pt;
  pt.t = rho;
  pt.rho = rho;
  pt.psi = y[0];
  pt.dpsi = y[1];
  pt.z = y[2];
  const State st{rho, y[0], y[1], y[2]};
  if (std::abs(std::cos(y[0])) >= kChartCosMin) {
    pt.I = first_integral(st);
    pt.Q_scale = scale_charge_closed(st, params.omega0, params.kc).Q;
  }
  pt.omega_eff = omega_effective(Jet2::of(st, psi_pp), params);
  return pt;
}

Profile build_profile(const OdeSolution<3>& sol, const State& initial,
                      const ModelParams& params, double tol,
                      Termination term) {
  Profile prof;
  prof.chart = Chart::Rho;
  prof.params = params;
  prof.rho0 = initial.rho;
  prof.tol = tol;
  prof.termination = term;
  prof.steps_accepted = sol.accepted;
  prof.steps_rejected = sol.rejected;
  for (const auto& step : sol.steps) {
    const OdeVec<3> y = step.eval(step.t0);
    const double psi_pp = step.eval_derivative(step.t0)[1];
    prof.points.push_back(make_point(step.t0, y, psi_pp, params));
  }
  if (!sol.steps.empty()) {
    const double psi_pp = sol.steps.back().eval_derivative(sol.t_end)[1];
    prof.points.push_back(make_point(sol.t_end, sol.y_end, psi_pp, params));
  } else {
    const double z0 = std::isfinite(initial.z) ? initial.z : 0.0;
    OdeVec<3> y0{initial.psi, initial.psi_p, z0};
    double psi_pp = kNaN;
    try {
      psi_pp = solve_psi_pp(initial, params);
    } catch (const SingularStateError&) {
    }
    prof.points.push_back(make_point(initial.rho, y0, psi_pp, params));
  }
  return prof;
}

}  // namespace

Profile integrate(const State& initial, std::pair<double, double> rho_span,
                  const ModelParams& params, double tol) {
  const double z0 = std::isfinite(initial.z) ? initial.z : 0.0;
  if (initial.rho != rho_span.first) {
    throw DomainError("integrate: initial.rho must equal rho_span.first");
  }

  double target = rho_span.second;
  bool axis_clipped = false;
  if (target < 1e-9) {
    target = 1e-9;  // the chart ends at the axis
    axis_clipped = true;
  }

  ShapeRhs rhs{params};
  auto event = [](double, const OdeVec<3>& y) {
    return std::abs(std::cos(y[0])) - 1e-6;
  };
  OdeSolution<3> sol = integrate_dopri5<3>(
      rhs, initial.rho, OdeVec<3>{initial.psi, initial.psi_p, z0}, target, tol,
      event, 1e-10);

  Termination term = Termination::SpanEnd;
  if (sol.event_hit) {
    term = Termination::TurningPoint;
  } else if (sol.singular) {
    term = Termination::Singular;
  } else if (axis_clipped) {
    term = Termination::Axis;
  }
  return build_profile(sol, initial, params, tol, term);
}

Profile integrate_fixed(const State& initial,
                        std::pair<double, double> rho_span,
                        const ModelParams& params, int n_steps) {
  const double z0 = std::isfinite(initial.z) ? initial.z : 0.0;
  ShapeRhs rhs{params};
  OdeSolution<3> sol = integrate_dopri5_fixed<3>(
      rhs, rho_span.first, OdeVec<3>{initial.psi, initial.psi_p, z0},
      rho_span.second, n_steps);
  return build_profile(sol, initial, params, kNaN,
                       sol.singular ? Termination::Singular
                                    : Termination::SpanEnd);
}

}  // namespace membrane
