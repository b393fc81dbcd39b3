#pragma once

#include <utility>

#include "membrane/types.hpp"

namespace membrane {

// Dilation first integral of the parameter-free case:
// I = rho^2 cos(psi) psi'^2 - sin^2(psi)/cos(psi).
// Throws SingularStateError at a turning point.
double first_integral(const State& state);

// Radicand of the quadrature: g(psi) = I cos(psi) + sin^2(psi).
double radicand(double I, double psi);

// Admissible psi-interval around psi = pi/2 (where the radicand is 1) inside
// the window (-pi/2, pi). Endpoints are either window edges or roots of the
// radicand, isolated by bisection to 1e-12.
struct BranchDomain {
  double psi_lo = 0.0;
  double psi_hi = 0.0;
  bool empty = false;
};
BranchDomain branch_domain(double I);

// Closed-form profile rho(psi) = rho0 exp(-sign * E(psi)) with
// E(psi) = int_{pi/2}^{psi} cos/sqrt(g); z accumulated by the same
// quadrature. sign = -1 gives the branch with rho/rho0 <= 1 (sphere-like at
// I = 0), sign = +1 the reciprocal branch (catenoid-like at I = 0).
Profile quadrature_profile(double I, double rho0, int sign,
                           std::pair<double, double> psi_range, int n);

// First-order form: rho cos(psi) psi' + sign * sqrt(g).
// Zero along quadrature profiles carrying the same sign label.
double residual_first_order(const State& state, double I, int sign);

// Graph form residual for z(rho):
// z'' - sign * (1/rho)(z'^2+1) sqrt(z'^2 + I sqrt(z'^2+1)).
double residual_graph(double rho, double z_p, double z_pp, double I, int sign);

}  // namespace membrane
