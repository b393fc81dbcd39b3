#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "membrane/types.hpp"

namespace membrane {

using Field2 = std::function<double(double rho, double psi)>;
using Field3 = std::function<double(double rho, double psi, double psi_p)>;

// Potential part of the first-order Lagrangian:
// V = -tan(psi) sin(psi)/(2 rho) - c0 psi - lt rho sec(psi)
//     + (c0 + omega0 - (pt/2) rho^2) tan(psi).
double potential(const State& state, const ModelParams& params);
double potential_rho(const State& state, const ModelParams& params);
double potential_psi(const State& state, const ModelParams& params);

// L = (rho cos(psi)/2) psi'^2 - V. Momentum dL/dpsi' = rho cos(psi) psi'.
double lagrangian(const State& state, const ModelParams& params);
double momentum(const State& state);

// Euler-Lagrange residual dL/dpsi - d/drho(dL/dpsi') along the jet:
// (rho sin(psi)/2) psi'^2 - cos(psi) psi' - rho cos(psi) psi'' - V_psi.
// Equals -sec^2(psi) * residual_integrated pointwise.
double el_residual(const Jet2& jet, const ModelParams& params);

// A Lagrangian presented as kinetic term + beta psi' + gamma, tracking the
// stack of gauge functions Phi applied. Only gamma_psi - beta_rho enters the
// Euler-Lagrange residual, and each Phi contributes its two mixed partials,
// which cancel; they are evaluated with one shared symmetric stencil so the
// cancellation is exact in floating point as well.
struct GaugeFunction {
  Field2 phi;
  Field2 phi_rho;  // optional analytic partials; finite differences otherwise
  Field2 phi_psi;
};

struct LagrangianVariant {
  ModelParams params;                // canonical base: beta = 0, gamma = -V
  std::vector<GaugeFunction> gauges;

  double beta(double rho, double psi) const;
  double gamma(double rho, double psi) const;
  double value(const State& state) const;  // kinetic + beta psi' + gamma
};

LagrangianVariant canonical_lagrangian(const ModelParams& params);
LagrangianVariant gauge_transform(const LagrangianVariant& base,
                                  const GaugeFunction& phi);
double el_residual(const LagrangianVariant& lag, const Jet2& jet);

// Symmetry generator on (rho, psi, psi') with divergence term B and
// equation-of-motion multiplier F. Partials default to central finite
// differences (relative step 1e-6); analytic partials can be supplied where
// exactness matters.
struct Generator {
  Field3 xi, eta, B, F;
  struct Partials {
    Field3 xi_rho, xi_psi, xi_psip;
    Field3 eta_rho, eta_psi, eta_psip;
    Field3 B_rho, B_psi, B_psip;
    Field3 F_rho, F_psi, F_psip;
  };
  bool has_partials = false;
  Partials partials;
};

Generator dilation_generator();  // xi = 2 rho, eta = 0, B = 0, F = 0

// Divergence-form invariance condition evaluated on a jet, with
// (psi, psi', psi'') treated as independent coordinates. Vanishes for every
// jet iff the generator is a variational symmetry.
double noether_residual(const Generator& gen, const Jet2& jet,
                        const ModelParams& params);

// Conserved charge xi L + (eta - xi psi') dL/dpsi' - B.
double noether_charge(const Generator& gen, const State& state,
                      const ModelParams& params);

// Conjugate momentum and Hamiltonian: p = rho cos(psi) psi',
// H = p^2/(2 rho cos psi) + V; satisfies H = p psi' - L.
std::pair<double, double> hamiltonian(const State& state,
                                      const ModelParams& params);

// Parameter-free Hamilton-Jacobi residual for the separable action
// S = sign * int sqrt(Ip cos psi + sin^2 psi) dpsi - (Ip/2) ln rho:
// S_rho + S_psi^2/(2 rho cos psi) - tan(psi) sin(psi)/(2 rho).
double hj_residual(double Ip, double rho, double psi, int sign);

// General evaluator with caller-supplied action derivatives.
double hj_residual_general(double S_rho, double S_psi, const State& state,
                           const ModelParams& params);

// Conjugate variable to Ip:
// J = (1/2)(sign * int_{range} cos/sqrt(Ip cos + sin^2) dpsi - ln rho).
double conjugate_time(double Ip, std::pair<double, double> psi_range,
                      double rho, int sign);

}  // namespace membrane
