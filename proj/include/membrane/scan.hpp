#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "membrane/types.hpp"

namespace membrane {

// Cartesian product of sample values for (rho, psi, psi') sweeps.
struct ResidualGrid {
  std::vector<double> rho;
  std::vector<double> psi;
  std::vector<double> psi_p;
};

// Default lattice used by the self-check suites: log-spaced radii,
// uniform angles, three slope samples.
ResidualGrid standard_grid(int n_rho = 40, int n_psi = 40,
                           double rho_min = 0.2, double rho_max = 5.0,
                           double psi_max = 1.2);

namespace scan_detail {

inline double abs_or_inf(double v) {
  return std::isfinite(v) ? std::abs(v)
                          : std::numeric_limits<double>::infinity();
}

}  // namespace scan_detail

// Max of |f(rho, psi, psi')| over the grid.  The parallel path reduces
// with max only, so it is bitwise identical to the serial reference.
template <typename F>
double max_abs_over_grid(F&& f, const ResidualGrid& grid, bool parallel) {
  const int nr = static_cast<int>(grid.rho.size());
  const int np = static_cast<int>(grid.psi.size());
  const int nq = static_cast<int>(grid.psi_p.size());
  double acc = 0.0;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for collapse(2) reduction(max : acc)
#endif
    for (int i = 0; i < nr; ++i) {
      for (int j = 0; j < np; ++j) {
        for (int k = 0; k < nq; ++k) {
          const double v = f(grid.rho[i], grid.psi[j], grid.psi_p[k]);
          acc = std::max(acc, scan_detail::abs_or_inf(v));
        }
      }
    }
    return acc;
  }
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < np; ++j) {
      for (int k = 0; k < nq; ++k) {
        const double v = f(grid.rho[i], grid.psi[j], grid.psi_p[k]);
        acc = std::max(acc, scan_detail::abs_or_inf(v));
      }
    }
  }
  return acc;
}

// Max |Noether residual| of the dilation generator over the grid.
// Serves as the workhorse kernel for the symmetry-breaking scans and
// as the benchmark payload.
double dilation_noether_grid_max(const ModelParams& params,
                                 const ResidualGrid& grid, bool parallel);

}  // namespace membrane
