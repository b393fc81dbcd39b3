#pragma once

#include "membrane/types.hpp"

namespace membrane {

// Stress components in the orthonormal (meridian e_s, azimuth, normal n)
// frame, with n = cos(psi) z_hat - sin(psi) rho_hat. f_phiphi_contra carries
// the 1/rho^2 metric factors of the contravariant azimuthal density.
struct StressSample {
  double f_normal = 0.0;        // -2 kc dH/ds                      [E/L^2]
  double f_ss = 0.0;            // meridional tension               [E/L^2]
  double f_phiphi = 0.0;        // azimuthal tension, orthonormal   [E/L^2]
  double f_phiphi_contra = 0.0; // f_phiphi / rho^2                 [E/L^4]
};

// Components from explicit curvature data:
// f_ss    = kc k_m   (2H + c0) - [(kc/2)(2H + c0)^2 + lambda]
// f_phiphi= kc k_phi (2H + c0) - [(kc/2)(2H + c0)^2 + lambda]
// f_normal= -2 kc dH/ds  (H itself, not 2H)
StressSample stress_components(double two_H, double dH_ds, double k_m,
                               double k_phi, double rho,
                               const ModelParams& params);

// Same from a parametric jet (needs psi_ddot for dH/ds).
StressSample stress_components(const ParametricPoint& pt,
                               const ModelParams& params);

struct ChargeSample {
  double rho = 0.0, psi = 0.0, psi_p = 0.0, z = 0.0;
  double Q = 0.0;  // ring charge per full turn      [E*L]
};

// Scale (dilation) ring charge in closed form. Both printed groupings,
//   pi kc (rho^2 psi'^2 cos psi - tan psi (sin psi - 2 rho omega0)
//          - 2 omega0 z)
//   pi kc I + 2 pi kc omega0 (rho tan psi - z),
// are evaluated and must agree to 1e-12; their common value is returned.
// When omega0 != 0 the charge depends on the z origin, so constancy is only
// meaningful along one profile with one fixed origin.
ChargeSample scale_charge_closed(const State& state, double omega0, double kc);

// Direct ring contraction 2 pi rho [f_ss (e_s . X) + f_normal (n . X)] with
// e_s . X = rho cos psi + z sin psi and n . X = z cos psi - rho sin psi.
// Agrees with the closed form on solutions of the shape equation.
double scale_charge_direct(const ParametricPoint& pt, const StressSample& s);

}  // namespace membrane
