#pragma once

#include "membrane/types.hpp"

namespace membrane {

// Mean-curvature sum and Gauss curvature of a surface of revolution.
// Convention: 2H = -(rho sin psi)'/rho, so both principal curvatures of a
// sphere traced with increasing psi are -1/R. The principal curvatures are
// k_m = -dpsi/ds (meridional) and k_phi = -sin(psi)/rho (azimuthal), with
// 2H = k_m + k_phi and K = k_m * k_phi.
struct Curvatures {
  double two_H = 0.0;  // [1/L]
  double K = 0.0;      // [1/L^2]
};

// rho-chart form; requires rho > 0.
Curvatures curvatures(const State& st);

// Parametric (arc-length) form; valid at vertical tangents.
Curvatures curvatures(const ParametricPoint& pt);

// Principal curvatures in the same convention.
double principal_meridional(const State& st);        // -psi_p cos psi
double principal_meridional(const ParametricPoint&); // -psi_dot
double principal_azimuthal(double rho, double psi);  // -sin(psi)/rho

// Laplace-Beltrami operator applied to an axisymmetric scalar f(rho):
//   lap f = (cos psi / rho) d/drho (rho cos psi df/drho)
//         = cos^2 psi f_pp + (cos psi / rho)(cos psi - rho psi_p sin psi) f_p.
// Requires |cos psi| >= kChartCosMin; catalog shapes with vertical tangents
// must use the parametric chart instead.
double laplacian_meridional(double rho, double psi, double psi_p, double f_p,
                            double f_pp);

// Fills z along the profile by quadrature of tan(psi) drho (rho-chart),
// rho sin(psi)/sqrt(...) dpsi (psi-chart, handled at generation time), or
// sin(psi) ds (parametric). Node spacing limits accuracy: each interval is
// integrated with the two-point Hermite rule, whose error is O(h^5) per
// interval. z(first point) = z_offset (default 0).
Profile accumulate_z(const Profile& profile, double z_offset = 0.0);

}  // namespace membrane
