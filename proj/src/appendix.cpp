#include "membrane/appendix.hpp"

#include <cmath>

#include "membrane/quadrature.hpp"
#include "membrane/scan.hpp"

namespace membrane {

double series_coefficient(int n) {
  double a = 1.0;
  for (int k = 0; k < n; ++k) a *= (k + 0.25) / (k + 1.0);
  return a;
}

double series_sqrt_sec(double sin_psi, int n_terms) {
  if (std::abs(sin_psi) >= 1.0) {
    throw DomainError("series_sqrt_sec: |sin psi| must be < 1");
  }
  const double x = sin_psi * sin_psi;
  double a = 1.0, pow_x = 1.0, sum = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    sum += a * pow_x;
    a *= (k + 0.25) / (k + 1.0);
    pow_x *= x;
  }
  return sum;
}

double series_int_sqrt_cos(double sin_psi, int n_terms, double G) {
  if (std::abs(sin_psi) >= 1.0) {
    throw DomainError("series_int_sqrt_cos: |sin psi| must be < 1");
  }
  const double x = sin_psi * sin_psi;
  double a = 1.0, pow_x = 1.0, sum = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    sum += a / (2.0 * k + 1.0) * pow_x;
    a *= (k + 0.25) / (k + 1.0);
    pow_x *= x;
  }
  return G + sin_psi * sum;
}

AnsatzGenerator trivial_ansatz(double C3) {
  AnsatzGenerator a;
  auto zero = [](double) { return 0.0; };
  a.C1 = a.C1p = a.C1pp = zero;
  a.C2 = a.C2p = a.C2pp = zero;
  a.C3 = C3;
  return a;
}

namespace {

double inner_log_integral(const AnsatzGenerator& a, double rho) {
  auto f = [&a](double r) { return a.C1(r) / r; };
  return integrate_adaptive(f, 1.0, rho, 1e-12).value;
}

double sqrt_cos(double psi) {
  const double c = std::cos(psi);
  if (!(c > 0.0)) {
    throw DomainError("ansatz generator: cos(psi) must be positive");
  }
  return std::sqrt(c);
}

}  // namespace

Generator ansatz_to_generator(const AnsatzGenerator& a) {
  const int N = a.n_terms;
  const double G = a.G;
  auto T = [N, G](double psi) {
    return series_int_sqrt_cos(std::sin(psi), N, G);
  };
  // exact psi-derivative of the truncated T: cos(psi) * truncated sqrt(sec)
  auto Tp = [N](double psi) {
    return std::cos(psi) * series_sqrt_sec(std::sin(psi), N);
  };

  Generator g;
  auto zero3 = [](double, double, double) { return 0.0; };

  g.xi = [a](double rho, double, double) {
    return a.C3 * rho + 2.0 * rho * inner_log_integral(a, rho);
  };
  g.eta = [a, T](double rho, double psi, double) {
    return (a.C1(rho) * T(psi) + a.C2(rho)) / sqrt_cos(psi);
  };
  g.B = [a, T](double rho, double psi, double) {
    const double t = T(psi);
    return rho * (0.5 * a.C1p(rho) * t * t + a.C2p(rho) * t);
  };
  g.F = zero3;

  g.has_partials = true;
  g.partials.xi_rho = [a](double rho, double, double) {
    return a.C3 + 2.0 * inner_log_integral(a, rho) + 2.0 * a.C1(rho);
  };
  g.partials.xi_psi = zero3;
  g.partials.xi_psip = zero3;
  g.partials.eta_rho = [a, T](double rho, double psi, double) {
    return (a.C1p(rho) * T(psi) + a.C2p(rho)) / sqrt_cos(psi);
  };
  g.partials.eta_psi = [a, T, Tp](double rho, double psi, double) {
    const double sc = sqrt_cos(psi);
    const double eta = (a.C1(rho) * T(psi) + a.C2(rho)) / sc;
    return a.C1(rho) * Tp(psi) / sc +
           0.5 * std::sin(psi) / (sc * sc) * eta;
  };
  g.partials.eta_psip = zero3;
  g.partials.B_rho = [a, T](double rho, double psi, double) {
    const double t = T(psi);
    return 0.5 * a.C1p(rho) * t * t + a.C2p(rho) * t +
           rho * (0.5 * a.C1pp(rho) * t * t + a.C2pp(rho) * t);
  };
  g.partials.B_psi = [a, T, Tp](double rho, double psi, double) {
    return rho * Tp(psi) * (a.C1p(rho) * T(psi) + a.C2p(rho));
  };
  g.partials.B_psip = zero3;
  g.partials.F_rho = zero3;
  g.partials.F_psi = zero3;
  g.partials.F_psip = zero3;
  return g;
}

RigidityReport rigidity_scan(
    const ModelParams& params,
    const std::vector<std::pair<std::string, AnsatzGenerator>>& trials,
    const RigidityGrid& grid) {
  RigidityReport report;
  report.params = params;

  ResidualGrid rgrid;
  rgrid.rho.resize(grid.n_rho);
  for (int i = 0; i < grid.n_rho; ++i) {
    const double f = static_cast<double>(i) / (grid.n_rho - 1);
    rgrid.rho[i] = grid.rho_min * std::pow(grid.rho_max / grid.rho_min, f);
  }
  rgrid.psi.resize(grid.n_psi);
  for (int i = 0; i < grid.n_psi; ++i) {
    rgrid.psi[i] = -grid.psi_max +
                   2.0 * grid.psi_max * static_cast<double>(i) /
                       (grid.n_psi - 1);
  }
  rgrid.psi_p = grid.psi_p;

  auto eval_trial = [&](const AnsatzGenerator& a) {
    const Generator gen = ansatz_to_generator(a);
    auto residual = [&](double rho, double psi, double psi_p) {
      return noether_residual(gen, Jet2{rho, psi, psi_p, 0.0}, params);
    };
    RigidityTrial t;
    t.max_residual =
        max_abs_over_grid(residual, rgrid, grid.parallel);
    auto anchored = [&](double rho, double psi, double psi_p) {
      return residual(rho, psi, psi_p) - residual(rho, 0.0, 0.0);
    };
    t.max_anchored = max_abs_over_grid(anchored, rgrid, grid.parallel);
    return t;
  };

  RigidityTrial trivial = eval_trial(trivial_ansatz(2.0));
  trivial.name = "trivial";
  report.trivial_passes = trivial.max_residual <= 1e-10;
  report.trials.push_back(trivial);

  report.all_others_fail = true;
  for (const auto& [name, ansatz] : trials) {
    RigidityTrial t = eval_trial(ansatz);
    t.name = name;
    if (t.max_anchored < 1e-4) report.all_others_fail = false;
    report.trials.push_back(t);
  }
  return report;
}

CoefficientRelationsReport coefficient_relations_check(
    const ModelParams& prm, const AnsatzGenerator& a,
    const std::vector<double>& rho_samples) {
  CoefficientRelationsReport rep;
  rep.rho_samples = rho_samples;
  for (double rho : rho_samples) {
    if (std::abs(a.C1(rho)) > 1e-14) {
      throw DomainError("coefficient_relations_check: requires C1 == 0");
    }
    const double first = a.C3 * rho *
                         (8.0 * prm.c0 + 10.0 * prm.omega0 -
                          15.0 * prm.p_t * rho * rho) /
                         (4.0 * (4.0 + 7.0 * prm.lambda_t * rho * rho));
    const double second = a.C3 * rho *
                          (48.0 * prm.c0 + 70.0 * prm.omega0 -
                           105.0 * prm.p_t * rho * rho) /
                          (16.0 * (3.0 + 4.0 * prm.lambda_t * rho * rho));
    rep.c2_first.push_back(first);
    rep.c2_second.push_back(second);
    rep.gap.push_back(std::abs(first - second));
    rep.max_gap = std::max(rep.max_gap, rep.gap.back());
    rep.max_obstruction =
        std::max(rep.max_obstruction, std::abs(prm.c0 * first));
  }
  double scale = 1.0;
  for (std::size_t i = 0; i < rep.c2_first.size(); ++i) {
    scale = std::max({scale, std::abs(rep.c2_first[i]),
                      std::abs(rep.c2_second[i])});
  }
  rep.forms_agree = rep.max_gap <= 1e-10 * scale;
  rep.obstruction_zero = rep.max_obstruction <= 1e-12 * scale;
  rep.consistent = rep.forms_agree && rep.obstruction_zero;
  return rep;
}

}  // namespace membrane
