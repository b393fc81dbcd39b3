#pragma once

#include <functional>

namespace membrane {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated Kronrod-Gauss discrepancy
  int evaluations = 0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod 15(7) with recursive bisection. The tolerance is
// absolute; intervals split until the local Kronrod-Gauss gap fits within
// their share of it or max_depth is hit.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol = 1e-12,
                                    int max_depth = 30);

}  // namespace membrane
