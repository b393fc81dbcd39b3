#include "membrane/catalog.hpp"

#include <cmath>
#include <numbers>

#include "membrane/geometry.hpp"
#include "membrane/quadrature.hpp"
#include "membrane/shape_eq.hpp"
#include "membrane/stress.hpp"
#include "membrane/willmore.hpp"

namespace membrane {

namespace {

double require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainError(std::string(what) + " must be positive");
  return v;
}

// Fill the derived columns (rho-chart slope, effective constant, scale
// charge) where the chart allows it; near vertical tangents they stay
// undefined.
ProfilePoint make_row(const ParametricPoint& pt, const ModelParams& prm) {
  ProfilePoint row;
  row.t = pt.s;
  row.rho = pt.rho;
  row.psi = pt.psi;
  row.dpsi = pt.psi_dot;
  row.z = pt.z;
  const double C = std::cos(pt.psi);
  if (std::abs(C) >= kChartCosMin) {
    const double S = std::sin(pt.psi);
    const double psi_p = pt.psi_dot / C;
    const double psi_pp =
        pt.psi_ddot / (C * C) + pt.psi_dot * pt.psi_dot * S / (C * C * C);
    State st{pt.rho, pt.psi, psi_p, pt.z};
    row.I = first_integral(st);
    row.omega_eff = omega_effective(Jet2{pt.rho, pt.psi, psi_p, psi_pp}, prm);
    if (std::isfinite(pt.z)) {
      row.Q_scale = scale_charge_closed(st, prm.omega0, prm.kc).Q;
    }
  }
  return row;
}

ParametricPoint sphere_jet(double R, double s) {
  const double u = s / R;
  ParametricPoint pt;
  pt.s = s;
  pt.rho = R * std::sin(u);
  pt.z = -R * std::cos(u);
  pt.psi = u;
  pt.psi_dot = 1.0 / R;
  pt.psi_ddot = 0.0;
  pt.psi_dddot = 0.0;
  return pt;
}

ParametricPoint catenoid_jet(double rho0, double s) {
  const double r2 = rho0 * rho0 + s * s;
  ParametricPoint pt;
  pt.s = s;
  pt.rho = std::sqrt(r2);
  pt.z = rho0 * std::asinh(s / rho0);
  pt.psi = std::atan2(rho0, s);
  pt.psi_dot = -rho0 / r2;
  pt.psi_ddot = 2.0 * rho0 * s / (r2 * r2);
  pt.psi_dddot = 2.0 * rho0 * (rho0 * rho0 - 3.0 * s * s) / (r2 * r2 * r2);
  return pt;
}

ParametricPoint cylinder_jet(double R, double s) {
  ParametricPoint pt;
  pt.s = s;
  pt.rho = R;
  pt.z = -s;
  pt.psi = -std::numbers::pi / 2.0;
  pt.psi_dot = 0.0;
  pt.psi_ddot = 0.0;
  pt.psi_dddot = 0.0;
  return pt;
}

ParametricPoint torus_jet(double R, double r, double s) {
  const double u = s / r;
  ParametricPoint pt;
  pt.s = s;
  pt.rho = R + r * std::cos(u);
  pt.z = r * std::sin(u);
  pt.psi = u + std::numbers::pi / 2.0;
  pt.psi_dot = 1.0 / r;
  pt.psi_ddot = 0.0;
  pt.psi_dddot = 0.0;
  return pt;
}

ParametricPoint disc_jet(double s) {
  ParametricPoint pt;
  pt.s = s;
  pt.rho = s;
  pt.z = 0.0;
  pt.psi = 0.0;
  pt.psi_dot = 0.0;
  pt.psi_ddot = 0.0;
  pt.psi_dddot = 0.0;
  return pt;
}

// Unduloid meridian between neck a and bulge b: sin(psi) =
// -(rho^2 + ab) / ((a+b) rho), a Delaunay surface with 2H = 2/(a+b).
// Jets are built in rho and converted to arc length.
ParametricPoint unduloid_jet(double a, double b, double rho, double s,
                             double z) {
  const double ab = a * b;
  const double apb = a + b;
  const double w = -(rho * rho + ab) / (apb * rho);
  const double w1 = -(rho * rho - ab) / (apb * rho * rho);
  const double w2 = -2.0 * ab / (apb * rho * rho * rho);
  const double w3 = 6.0 * ab / (apb * rho * rho * rho * rho);
  const double C = std::sqrt(std::max(0.0, 1.0 - w * w));
  const double S = w;
  const double p1 = w1 / C;
  const double p2 = (w2 + S * p1 * p1) / C;
  const double p3 = (w3 + w1 * p1 * p1 + 2.0 * S * p1 * p2) / C +
                    p2 * S * p1 / C;
  ParametricPoint pt;
  pt.s = s;
  pt.rho = rho;
  pt.z = z;
  pt.psi = std::asin(w);
  pt.psi_dot = C * p1;
  pt.psi_ddot = C * (C * p2 - S * p1 * p1);
  pt.psi_dddot =
      C * (C * C * p3 - 4.0 * C * S * p1 * p2 - (C * C - S * S) * p1 * p1 * p1);
  return pt;
}

}  // namespace

double laplacian_mean_curvature(const ParametricPoint& pt) {
  if (!std::isfinite(pt.psi_ddot) || !std::isfinite(pt.psi_dddot)) {
    throw DomainError(
        "laplacian_mean_curvature: needs psi derivatives to third order");
  }
  if (!(pt.rho > 0.0)) {
    throw DomainError("laplacian_mean_curvature: rho must be positive");
  }
  const double C = std::cos(pt.psi);
  const double S = std::sin(pt.psi);
  const double rho = pt.rho;
  const double q1 = pt.psi_dot, q2 = pt.psi_ddot, q3 = pt.psi_dddot;
  const double dW = -(q2 + C * q1 / rho - S * C / (rho * rho));
  const double d2W =
      -(q3 + (C * q2 - S * q1 * q1) / rho - C * C * q1 / (rho * rho) -
        (C * C - S * S) * q1 / (rho * rho) +
        2.0 * S * C * C / (rho * rho * rho));
  const double lapW = d2W + (C / rho) * dW;
  return lapW / 2.0;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "sphere",          "catenoid",       "cylinder",
      "unduloid-constraint", "clifford-torus", "flat-disc"};
  return names;
}

CatalogEntry make_catalog_entry(
    const std::string& name,
    const std::map<std::string, double>& overrides) {
  CatalogEntry e;
  e.name = name;

  std::map<std::string, double> shape_keys;
  std::map<std::string, double> model_keys;
  for (const auto& [k, v] : overrides) {
    if (k == "c0" || k == "lambda" || k == "p" || k == "kc" ||
        k == "omega0") {
      model_keys[k] = v;
    } else {
      shape_keys[k] = v;
    }
  }

  auto shape_or = [&shape_keys](const std::string& k, double d) {
    auto it = shape_keys.find(k);
    return it == shape_keys.end() ? d : it->second;
  };
  auto known_shape = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : shape_keys) {
      bool ok = false;
      for (const char* known : keys) ok = ok || (k == known);
      if (!ok) {
        throw DomainError("unknown catalog parameter '" + k + "' for " +
                          name);
      }
    }
  };

  const double kc = model_keys.count("kc") ? model_keys.at("kc") : 1.0;
  double c0 = 0.0, lambda = 0.0, p = 0.0, omega0 = 0.0;

  if (name == "sphere") {
    known_shape({"R"});
    e.shape["R"] = require_positive(shape_or("R", 1.0), "R");
  } else if (name == "catenoid") {
    known_shape({"rho0"});
    e.shape["rho0"] = require_positive(shape_or("rho0", 1.0), "rho0");
  } else if (name == "cylinder") {
    known_shape({"R"});
    const double R = require_positive(shape_or("R", 1.0), "R");
    e.shape["R"] = R;
    lambda = kc / (2.0 * R * R);
  } else if (name == "unduloid-constraint") {
    known_shape({"a", "b"});
    const double a = require_positive(shape_or("a", 0.6), "a");
    const double b = require_positive(shape_or("b", 1.4), "b");
    if (!(a < b)) throw DomainError("unduloid needs a < b");
    e.shape["a"] = a;
    e.shape["b"] = b;
    const double H0 = 1.0 / (a + b);
    c0 = -2.0 * H0;
    lambda = 0.5 * kc;
    p = 2.0 * lambda * H0;
  } else if (name == "clifford-torus") {
    known_shape({"r", "ratio"});
    e.shape["r"] = require_positive(shape_or("r", 1.0), "r");
    e.shape["ratio"] =
        require_positive(shape_or("ratio", std::numbers::sqrt2), "ratio");
    if (e.shape["ratio"] <= 1.0) {
      throw DomainError("clifford-torus needs ratio > 1");
    }
  } else if (name == "flat-disc") {
    known_shape({});
  } else {
    throw DomainError("unknown catalog name '" + name + "'");
  }

  if (model_keys.count("c0")) c0 = model_keys.at("c0");
  if (model_keys.count("lambda")) lambda = model_keys.at("lambda");
  if (model_keys.count("p")) p = model_keys.at("p");
  if (model_keys.count("omega0")) omega0 = model_keys.at("omega0");
  e.params = physical_params(kc, 0.0, lambda, p, c0, omega0);
  return e;
}

CatalogResult catalog_profile(const CatalogEntry& entry, int n_samples) {
  if (n_samples < 2) throw DomainError("catalog needs at least 2 samples");
  CatalogResult res;
  res.entry = entry;
  const ModelParams& prm = entry.params;
  const double kc = prm.kc;
  std::vector<ParametricPoint>& pts = res.jets;
  pts.reserve(n_samples);

  if (entry.name == "sphere") {
    const double R = entry.shape.at("R");
    const double s0 = 0.05 * std::numbers::pi * R;
    const double s1 = 0.95 * std::numbers::pi * R;
    for (int i = 0; i < n_samples; ++i) {
      pts.push_back(sphere_jet(R, s0 + (s1 - s0) * i / (n_samples - 1)));
    }
    res.constraint_residual =
        prm.p_phys * R * R + 2.0 * prm.lambda_phys * R +
        kc * prm.c0 * prm.c0 * R - 2.0 * kc * prm.c0;
  } else if (entry.name == "catenoid") {
    const double rho0 = entry.shape.at("rho0");
    for (int i = 0; i < n_samples; ++i) {
      const double s = -2.0 * rho0 + 4.0 * rho0 * i / (n_samples - 1);
      pts.push_back(catenoid_jet(rho0, s));
    }
    res.constraint_residual =
        std::max(std::abs(prm.c0), std::abs(prm.p_phys) / kc);
  } else if (entry.name == "cylinder") {
    const double R = entry.shape.at("R");
    for (int i = 0; i < n_samples; ++i) {
      pts.push_back(cylinder_jet(R, 2.0 * R * i / (n_samples - 1)));
    }
    res.constraint_residual =
        kc * (1.0 / R + prm.c0) *
            (1.0 / (2.0 * R * R) - prm.c0 / (2.0 * R)) -
        prm.lambda_phys / R + prm.p_phys;
  } else if (entry.name == "unduloid-constraint") {
    const double a = entry.shape.at("a");
    const double b = entry.shape.at("b");
    const double lo = a + 0.05 * (b - a);
    const double hi = b - 0.05 * (b - a);
    double s = 0.0, z = 0.0, rho_prev = lo;
    for (int i = 0; i < n_samples; ++i) {
      const double rho = lo + (hi - lo) * i / (n_samples - 1);
      if (i > 0) {
        auto sec = [a, b](double r) {
          const double w = -(r * r + a * b) / ((a + b) * r);
          return 1.0 / std::sqrt(1.0 - w * w);
        };
        auto slope = [a, b, &sec](double r) {
          const double w = -(r * r + a * b) / ((a + b) * r);
          return w * sec(r);
        };
        s += integrate_adaptive(sec, rho_prev, rho, 1e-13).value;
        z += integrate_adaptive(slope, rho_prev, rho, 1e-13).value;
        rho_prev = rho;
      }
      pts.push_back(unduloid_jet(a, b, rho, s, z));
    }
    const double H0 = 1.0 / (a + b);
    res.constraint_residual =
        std::max(std::abs(prm.c0 + 2.0 * H0),
                 std::abs(prm.p_phys - 2.0 * prm.lambda_phys * H0) / kc);
  } else if (entry.name == "clifford-torus") {
    const double r = entry.shape.at("r");
    const double R = entry.shape.at("ratio") * r;
    for (int i = 0; i < n_samples; ++i) {
      pts.push_back(torus_jet(R, r, 2.0 * std::numbers::pi * r * i /
                                        static_cast<double>(n_samples)));
    }
    res.constraint_residual = entry.shape.at("ratio") - std::numbers::sqrt2;
  } else if (entry.name == "flat-disc") {
    for (int i = 0; i < n_samples; ++i) {
      pts.push_back(disc_jet(0.1 + 1.9 * i / (n_samples - 1)));
    }
    res.constraint_residual = prm.p_phys;
  } else {
    throw DomainError("unknown catalog name '" + entry.name + "'");
  }

  res.profile.chart = Chart::Parametric;
  res.profile.params = prm;
  res.profile.termination = Termination::SpanEnd;
  res.profile.points.reserve(pts.size());
  for (const ParametricPoint& pt : pts) {
    const Curvatures cv = curvatures(pt);
    const double lap_H = laplacian_mean_curvature(pt);
    const double r = residual_general(cv.two_H, cv.K, lap_H, prm);
    res.max_residual_general = std::max(res.max_residual_general,
                                        std::abs(r));
    res.profile.points.push_back(make_row(pt, prm));
  }

  res.constraint_ok = std::abs(res.constraint_residual) <= 1e-9;
  if (!res.constraint_ok) {
    res.warnings.push_back("parameter constraint violated for " +
                           entry.name + ": residual " +
                           std::to_string(res.constraint_residual));
  }
  return res;
}

}  // namespace membrane
