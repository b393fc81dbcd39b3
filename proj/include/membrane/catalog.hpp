#pragma once

#include <map>
#include <string>
#include <vector>

#include "membrane/types.hpp"

namespace membrane {

// Named analytic surface with the parameter constraint that makes it a
// stationary shape.  Shape keys depend on the name:
//   sphere: R          catenoid: rho0        cylinder: R
//   unduloid-constraint: a, b (neck and bulge radii)
//   clifford-torus: r, ratio (tube radius, R/r)
//   flat-disc: (none)
struct CatalogEntry {
  std::string name;
  std::map<std::string, double> shape;
  ModelParams params;
};

struct CatalogResult {
  CatalogEntry entry;
  Profile profile;
  // Arc-length jets (with third derivatives) backing the residual check.
  std::vector<ParametricPoint> jets;
  double max_residual_general = 0.0;
  double constraint_residual = 0.0;
  bool constraint_ok = true;
  std::vector<std::string> warnings;
};

// Known catalog names, in canonical order.
const std::vector<std::string>& catalog_names();

// Build an entry from a name plus key=value overrides.  Shape keys are
// listed above; model keys are c0, lambda, p, kc, omega0 (physical
// tension and pressure).  Dependent defaults (cylinder tension,
// unduloid c0 and pressure) are derived from the shape before explicit
// model overrides are applied.
CatalogEntry make_catalog_entry(
    const std::string& name,
    const std::map<std::string, double>& overrides = {});

// Sample the analytic profile and check it against the general shape
// equation.  A violated parameter constraint produces a warning, not an
// error; the profile is still returned.
CatalogResult catalog_profile(const CatalogEntry& entry,
                              int n_samples = 100);

// Laplace-Beltrami of the mean curvature along the meridian, from an
// arc-length jet carrying psi derivatives up to third order.
double laplacian_mean_curvature(const ParametricPoint& pt);

}  // namespace membrane
