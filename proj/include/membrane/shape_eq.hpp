#pragma once

#include <utility>

#include "membrane/types.hpp"

namespace membrane {

// Left side of the general equilibrium equation for the bilayer free energy:
// 2 kc lap_H + kc (2H + c0) (2H^2 - 2K - c0 H) - 2 lambda H + p,
// written with two_H = 2H and lap_H the surface Laplacian of H itself.
// Zero iff the point is in mechanical equilibrium.
double residual_general(double two_H, double K, double lap_H,
                        const ModelParams& params);

// Third-order form of the same equation in the rho-chart. Identically equal
// to residual_general composed with the axisymmetric curvature maps, divided
// by kc; kept as an independent expansion so the closure can be tested.
double residual_third_order(const Jet3& jet, const ModelParams& params);

// Second-order reduced form, exactly as used throughout:
// rho cos^3(psi) psi'' - (rho/2) cos^2(psi) sin(psi) psi'^2 + cos^3(psi) psi'
// + sin^3(psi)/(2 rho) + c0 sin^2(psi) - (lt rho^2 + 1) sin(psi)/rho
// - (pt/2) rho^2 + omega0.
// Its constancy in omega0 along solutions is what makes it a first integral
// of the third-order form.
double residual_integrated(const Jet2& jet, const ModelParams& params);

// The unique psi'' making residual_integrated vanish at this state.
// Throws SingularStateError near a turning point (|cos psi| < 1e-8) or the
// axis (rho < 1e-12).
double solve_psi_pp(const State& state, const ModelParams& params);

// The omega0 value that would make residual_integrated vanish at this jet; the
// params' own omega0 field is ignored. Constant along solutions.
double omega_effective(const Jet2& jet, const ModelParams& params_without_omega);

// Adaptive integration of (psi, psi', z) over rho. Stops early at a turning
// point (|cos psi| < 1e-6, located on the interpolant to 1e-10 in rho) or at
// the axis (rho < 1e-9). Profile rows sit at accepted step starts plus the
// final point; psi'' for the omega_eff column comes from the interpolant's
// derivative.
Profile integrate(const State& initial, std::pair<double, double> rho_span,
                  const ModelParams& params, double tol = 1e-10);

// Fixed-step variant used to measure the integrator's convergence order.
Profile integrate_fixed(const State& initial, std::pair<double, double> rho_span,
                        const ModelParams& params, int n_steps);

}  // namespace membrane
