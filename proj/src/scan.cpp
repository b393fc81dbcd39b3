#include "membrane/scan.hpp"

#include <cmath>

#include "membrane/variational.hpp"

namespace membrane {

ResidualGrid standard_grid(int n_rho, int n_psi, double rho_min,
                           double rho_max, double psi_max) {
  ResidualGrid g;
  g.rho.resize(n_rho);
  for (int i = 0; i < n_rho; ++i) {
    const double f = static_cast<double>(i) / (n_rho - 1);
    g.rho[i] = rho_min * std::pow(rho_max / rho_min, f);
  }
  g.psi.resize(n_psi);
  for (int i = 0; i < n_psi; ++i) {
    g.psi[i] =
        -psi_max + 2.0 * psi_max * static_cast<double>(i) / (n_psi - 1);
  }
  g.psi_p = {-1.0, 0.0, 1.0};
  return g;
}

double dilation_noether_grid_max(const ModelParams& params,
                                 const ResidualGrid& grid, bool parallel) {
  const Generator gen = dilation_generator();
  auto f = [&](double rho, double psi, double psi_p) {
    return noether_residual(gen, Jet2{rho, psi, psi_p, 0.0}, params);
  };
  return max_abs_over_grid(f, grid, parallel);
}

}  // namespace membrane
