#include "membrane/geometry.hpp"

#include <cmath>

namespace membrane {

ModelParams reduced_params(double c0, double lambda_t, double p_t,
                           double omega0, double kc) {
  if (!(kc > 0.0)) throw DomainError("kc must be positive");
  ModelParams p;
  p.c0 = c0;
  p.lambda_t = lambda_t;
  p.p_t = p_t;
  p.omega0 = omega0;
  p.kc = kc;
  p.lambda_phys = (lambda_t - 0.5 * c0 * c0) * kc;
  p.p_phys = p_t * kc;
  return p;
}

ModelParams physical_params(double kc, double kbar, double lambda_phys,
                            double p_phys, double c0, double omega0) {
  if (!(kc > 0.0)) throw DomainError("kc must be positive");
  ModelParams p;
  p.kc = kc;
  p.kbar = kbar;
  p.lambda_phys = lambda_phys;
  p.p_phys = p_phys;
  p.c0 = c0;
  p.omega0 = omega0;
  p.lambda_t = lambda_phys / kc + 0.5 * c0 * c0;
  p.p_t = p_phys / kc;
  return p;
}

bool params_consistent(const ModelParams& p, double tol) {
  if (!(p.kc > 0.0)) return false;
  const double lam = p.lambda_phys / p.kc + 0.5 * p.c0 * p.c0;
  const double pt = p.p_phys / p.kc;
  const double s1 = std::max({1.0, std::abs(lam), std::abs(p.lambda_t)});
  const double s2 = std::max({1.0, std::abs(pt), std::abs(p.p_t)});
  return std::abs(lam - p.lambda_t) <= tol * s1 &&
         std::abs(pt - p.p_t) <= tol * s2;
}

std::string to_string(Chart c) {
  switch (c) {
    case Chart::Rho: return "rho";
    case Chart::Psi: return "psi";
    case Chart::Parametric: return "parametric";
  }
  return "rho";
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::SpanEnd: return "span-end";
    case Termination::TurningPoint: return "turning-point";
    case Termination::Axis: return "axis";
    case Termination::Singular: return "singular";
  }
  return "span-end";
}

Chart chart_from_string(const std::string& s) {
  if (s == "rho") return Chart::Rho;
  if (s == "psi") return Chart::Psi;
  if (s == "parametric") return Chart::Parametric;
  throw DomainError("unknown chart: " + s);
}

Termination termination_from_string(const std::string& s) {
  if (s == "span-end") return Termination::SpanEnd;
  if (s == "turning-point") return Termination::TurningPoint;
  if (s == "axis") return Termination::Axis;
  if (s == "singular") return Termination::Singular;
  throw DomainError("unknown termination: " + s);
}

Curvatures curvatures(const State& st) {
  if (!(st.rho > 0.0)) throw DomainError("curvatures: rho must be positive");
  const double c = std::cos(st.psi);
  const double s = std::sin(st.psi);
  Curvatures out;
  out.two_H = -(st.psi_p * c + s / st.rho);
  out.K = st.psi_p * c * s / st.rho;
  return out;
}

Curvatures curvatures(const ParametricPoint& pt) {
  if (!(pt.rho > 0.0)) throw DomainError("curvatures: rho must be positive");
  const double s = std::sin(pt.psi);
  Curvatures out;
  out.two_H = -(pt.psi_dot + s / pt.rho);
  out.K = pt.psi_dot * s / pt.rho;
  return out;
}

double principal_meridional(const State& st) {
  return -st.psi_p * std::cos(st.psi);
}

double principal_meridional(const ParametricPoint& pt) { return -pt.psi_dot; }

double principal_azimuthal(double rho, double psi) {
  return -std::sin(psi) / rho;
}

double laplacian_meridional(double rho, double psi, double psi_p, double f_p,
                            double f_pp) {
  const double c = std::cos(psi);
  if (std::abs(c) < kChartCosMin) {
    throw DomainError("laplacian_meridional: turning point (cos psi ~ 0)");
  }
  const double s = std::sin(psi);
  return c * c * f_pp + (c / rho) * (c - rho * psi_p * s) * f_p;
}

namespace {

// Two-point Hermite rule on one interval: exact through cubics, O(h^5) error.
double hermite_interval(double h, double f0, double f1, double d0, double d1) {
  return 0.5 * h * (f0 + f1) + h * h / 12.0 * (d0 - d1);
}

}  // namespace

Profile accumulate_z(const Profile& profile, double z_offset) {
  if (profile.points.size() < 2) {
    throw DomainError("accumulate_z: need at least 2 points");
  }
  Profile out = profile;
  auto& pts = out.points;

  // integrand value and t-derivative at a node, in the chart variable
  auto load = [&](const ProfilePoint& p, double& f, double& df) {
    const double c = std::cos(p.psi);
    const double s = std::sin(p.psi);
    switch (profile.chart) {
      case Chart::Rho: {
        if (std::abs(c) < kChartCosMin) {
          throw SingularStateError("accumulate_z: turning point in rho-chart",
                                   p.state());
        }
        f = s / c;                       // dz/drho
        df = p.dpsi / (c * c);           // d/drho tan psi
        break;
      }
      case Chart::Parametric: {
        f = s;                           // dz/ds
        df = c * p.dpsi;                 // d/ds sin psi, dpsi = psi_dot
        break;
      }
      case Chart::Psi: {
        // dz/dpsi = -sign * rho sin psi / sqrt(g), g = I cos psi + sin^2 psi;
        // needs the branch first integral carried in the I column.
        const double I = profile.points.front().I;
        if (!std::isfinite(I)) {
          throw DomainError(
              "accumulate_z: psi-chart profile lacks first-integral metadata");
        }
        const double g = I * c + s * s;
        if (!(g > 0.0)) throw DomainError("accumulate_z: radicand <= 0");
        const double sg = std::sqrt(g);
        const double sign = static_cast<double>(profile.branch_sign);
        const double drho = -sign * p.rho * c / sg;          // drho/dpsi
        const double dg = s * (2.0 * c - I);                 // dg/dpsi
        f = -sign * p.rho * s / sg;
        df = -sign * (drho * s / sg + p.rho * c / sg -
                      p.rho * s * dg / (2.0 * g * sg));
        break;
      }
    }
  };

  double z = z_offset;
  double f0 = 0.0, d0 = 0.0;
  load(pts[0], f0, d0);
  pts[0].z = z;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    double f1 = 0.0, d1 = 0.0;
    load(pts[i], f1, d1);
    z += hermite_interval(pts[i].t - pts[i - 1].t, f0, f1, d0, d1);
    pts[i].z = z;
    f0 = f1;
    d0 = d1;
  }
  return out;
}

}  // namespace membrane
