#pragma once

#include <functional>
#include <string>
#include <vector>

#include "membrane/types.hpp"
#include "membrane/variational.hpp"

namespace membrane {

// n-th coefficient of the sqrt(sec) expansion in powers of sin^2:
// a_0 = 1, a_{n+1} = a_n (n + 1/4)/(n + 1).
double series_coefficient(int n);

// Truncated sum  sum_{k<n_terms} a_k sin^{2k}(psi)  ->  sqrt(sec psi).
double series_sqrt_sec(double sin_psi, int n_terms);

// Truncated antiderivative  G + sum_{k<n_terms} a_k/(2k+1) sin^{2k+1}(psi)
// -> integral of sqrt(cos psi) dpsi.
double series_int_sqrt_cos(double sin_psi, int n_terms, double G = 0.0);

// Restricted generator family: eta = (C1(rho) T(psi) + C2(rho))/sqrt(cos),
// xi = C3 rho + 2 rho int_1^rho C1(r)/r dr, with T the truncated
// antiderivative above, B completing the divergence, F = 0. Derivatives of
// the C's are caller-supplied so the generator's partials stay analytic.
struct AnsatzGenerator {
  std::function<double(double)> C1, C1p, C1pp;
  std::function<double(double)> C2, C2p, C2pp;
  double C3 = 0.0;
  double G = 0.0;
  int n_terms = 100;
};

AnsatzGenerator trivial_ansatz(double C3);  // C1 = C2 = 0

Generator ansatz_to_generator(const AnsatzGenerator& a);

// Grid verdict for one trial generator. max_residual is the plain grid max
// of |noether_residual|; max_anchored subtracts the psi = 0 value at the
// same rho first, which quotients out the B(rho)-only gauge freedom.
struct RigidityTrial {
  std::string name;
  double max_residual = 0.0;
  double max_anchored = 0.0;
};

struct RigidityReport {
  ModelParams params;
  std::vector<RigidityTrial> trials;
  // verdicts for the built-in thresholds: pass <= 1e-10, fail >= 1e-4
  bool trivial_passes = false;   // plain max of the trivial trial <= 1e-10
  bool all_others_fail = false;  // anchored max of every other trial >= 1e-4
};

struct RigidityGrid {
  double rho_min = 0.2, rho_max = 5.0;
  int n_rho = 40;
  double psi_max = 1.2;
  int n_psi = 40;
  std::vector<double> psi_p{-1.0, 0.0, 1.0};
  bool parallel = true;
};

RigidityReport rigidity_scan(
    const ModelParams& params,
    const std::vector<std::pair<std::string, AnsatzGenerator>>& trials,
    const RigidityGrid& grid = RigidityGrid{});

// With C1 = 0 the invariance condition pins C2 twice over; the two closed
// forms, the residual parameter relation 6 c0 + 10 omega0 - 15 pt rho^2 = 0
// they force, and the final c0 C2 = 0 obstruction are all evaluated here.
struct CoefficientRelationsReport {
  std::vector<double> rho_samples;
  std::vector<double> c2_first, c2_second, gap;
  double max_gap = 0.0;
  bool forms_agree = false;
  double max_obstruction = 0.0;  // max over samples of |c0 * C2|
  bool obstruction_zero = false;
  bool consistent = false;  // forms_agree && obstruction_zero
};

CoefficientRelationsReport coefficient_relations_check(
    const ModelParams& params, const AnsatzGenerator& a,
    const std::vector<double>& rho_samples);

}  // namespace membrane
