#include "membrane/variational.hpp"

#include <cmath>

#include "membrane/quadrature.hpp"
#include "membrane/willmore.hpp"

namespace membrane {

namespace {

double require_cos(const State& st, const char* who) {
  const double C = std::cos(st.psi);
  if (std::abs(C) < kChartCosMin) {
    throw SingularStateError(std::string(who) + ": cos(psi) ~ 0", st);
  }
  return C;
}

// five-point central derivative, ~1e-11 on smooth fields
double fd5(const std::function<double(double)>& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h);
}

}  // namespace

double potential(const State& st, const ModelParams& prm) {
  const double C = require_cos(st, "potential");
  const double S = std::sin(st.psi);
  const double t = S / C;
  return -t * S / (2.0 * st.rho) - prm.c0 * st.psi -
         prm.lambda_t * st.rho / C +
         (prm.c0 + prm.omega0 - 0.5 * prm.p_t * st.rho * st.rho) * t;
}

double potential_rho(const State& st, const ModelParams& prm) {
  const double C = require_cos(st, "potential_rho");
  const double S = std::sin(st.psi);
  const double t = S / C;
  return t * S / (2.0 * st.rho * st.rho) - prm.lambda_t / C -
         prm.p_t * st.rho * t;
}

double potential_psi(const State& st, const ModelParams& prm) {
  const double C = require_cos(st, "potential_psi");
  const double S = std::sin(st.psi);
  const double sec2 = 1.0 / (C * C);
  return -S * (sec2 + 1.0) / (2.0 * st.rho) - prm.c0 -
         prm.lambda_t * st.rho * S * sec2 +
         (prm.c0 + prm.omega0 - 0.5 * prm.p_t * st.rho * st.rho) * sec2;
}

double lagrangian(const State& st, const ModelParams& prm) {
  const double C = require_cos(st, "lagrangian");
  return 0.5 * st.rho * C * st.psi_p * st.psi_p - potential(st, prm);
}

double momentum(const State& st) {
  return st.rho * std::cos(st.psi) * st.psi_p;
}

double el_residual(const Jet2& jet, const ModelParams& prm) {
  const State st = jet.state();
  const double C = require_cos(st, "el_residual");
  const double S = std::sin(st.psi);
  return 0.5 * st.rho * S * st.psi_p * st.psi_p - C * st.psi_p -
         st.rho * C * jet.psi_pp - potential_psi(st, prm);
}

namespace {

double gauge_partial_rho(const GaugeFunction& g, double rho, double psi) {
  if (g.phi_rho) return g.phi_rho(rho, psi);
  return fd5([&](double r) { return g.phi(r, psi); }, rho);
}

double gauge_partial_psi(const GaugeFunction& g, double rho, double psi) {
  if (g.phi_psi) return g.phi_psi(rho, psi);
  return fd5([&](double p) { return g.phi(rho, p); }, psi);
}

// both mixed partials of Phi share this one stencil, so their difference in
// the Euler-Lagrange residual cancels exactly
double gauge_mixed(const GaugeFunction& g, double rho, double psi) {
  const double h = 1e-4 * std::max(1.0, std::abs(rho));
  const double k = 1e-4 * std::max(1.0, std::abs(psi));
  return (g.phi(rho + h, psi + k) - g.phi(rho + h, psi - k) -
          g.phi(rho - h, psi + k) + g.phi(rho - h, psi - k)) /
         (4.0 * h * k);
}

}  // namespace

double LagrangianVariant::beta(double rho, double psi) const {
  double b = 0.0;
  for (const auto& g : gauges) b -= gauge_partial_psi(g, rho, psi);
  return b;
}

double LagrangianVariant::gamma(double rho, double psi) const {
  double c = -potential(State{rho, psi, 0.0}, params);
  for (const auto& g : gauges) c -= gauge_partial_rho(g, rho, psi);
  return c;
}

double LagrangianVariant::value(const State& st) const {
  const double C = require_cos(st, "LagrangianVariant::value");
  return 0.5 * st.rho * C * st.psi_p * st.psi_p +
         beta(st.rho, st.psi) * st.psi_p + gamma(st.rho, st.psi);
}

LagrangianVariant canonical_lagrangian(const ModelParams& params) {
  return LagrangianVariant{params, {}};
}

LagrangianVariant gauge_transform(const LagrangianVariant& base,
                                  const GaugeFunction& phi) {
  LagrangianVariant out = base;
  out.gauges.push_back(phi);
  return out;
}

double el_residual(const LagrangianVariant& lag, const Jet2& jet) {
  double r = el_residual(jet, lag.params);
  for (const auto& g : lag.gauges) {
    const double m_from_gamma = gauge_mixed(g, jet.rho, jet.psi);
    const double m_from_beta = gauge_mixed(g, jet.rho, jet.psi);
    r += m_from_beta - m_from_gamma;
  }
  return r;
}

Generator dilation_generator() {
  Generator g;
  auto zero = [](double, double, double) { return 0.0; };
  g.xi = [](double rho, double, double) { return 2.0 * rho; };
  g.eta = zero;
  g.B = zero;
  g.F = zero;
  g.has_partials = true;
  g.partials.xi_rho = [](double, double, double) { return 2.0; };
  g.partials.xi_psi = zero;
  g.partials.xi_psip = zero;
  g.partials.eta_rho = zero;
  g.partials.eta_psi = zero;
  g.partials.eta_psip = zero;
  g.partials.B_rho = zero;
  g.partials.B_psi = zero;
  g.partials.B_psip = zero;
  g.partials.F_rho = zero;
  g.partials.F_psi = zero;
  g.partials.F_psip = zero;
  return g;
}

namespace {

struct FieldJet {
  double value, d_rho, d_psi, d_psip;
};

FieldJet field_jet(const Field3& f, const Field3& fr, const Field3& fp,
                   const Field3& fq, bool analytic, double rho, double psi,
                   double psi_p) {
  FieldJet out;
  out.value = f(rho, psi, psi_p);
  if (analytic) {
    out.d_rho = fr(rho, psi, psi_p);
    out.d_psi = fp(rho, psi, psi_p);
    out.d_psip = fq(rho, psi, psi_p);
    return out;
  }
  const double hr = 1e-6 * std::max(1.0, std::abs(rho));
  const double hp = 1e-6 * std::max(1.0, std::abs(psi));
  const double hq = 1e-6 * std::max(1.0, std::abs(psi_p));
  out.d_rho = (f(rho + hr, psi, psi_p) - f(rho - hr, psi, psi_p)) / (2 * hr);
  out.d_psi = (f(rho, psi + hp, psi_p) - f(rho, psi - hp, psi_p)) / (2 * hp);
  out.d_psip = (f(rho, psi, psi_p + hq) - f(rho, psi, psi_p - hq)) / (2 * hq);
  return out;
}

}  // namespace

double noether_residual(const Generator& gen, const Jet2& jet,
                        const ModelParams& prm) {
  const State st = jet.state();
  const double C = require_cos(st, "noether_residual");
  const double S = std::sin(st.psi);
  const double r = st.rho, q = st.psi_p, q2 = jet.psi_pp;

  const FieldJet xi = field_jet(gen.xi, gen.partials.xi_rho,
                                gen.partials.xi_psi, gen.partials.xi_psip,
                                gen.has_partials, r, st.psi, q);
  const FieldJet eta = field_jet(gen.eta, gen.partials.eta_rho,
                                 gen.partials.eta_psi, gen.partials.eta_psip,
                                 gen.has_partials, r, st.psi, q);
  const FieldJet B = field_jet(gen.B, gen.partials.B_rho, gen.partials.B_psi,
                               gen.partials.B_psip, gen.has_partials, r,
                               st.psi, q);
  const double F = gen.F(r, st.psi, q);

  const double L = lagrangian(st, prm);
  const double L_rho = 0.5 * C * q * q - potential_rho(st, prm);
  const double L_psi = -0.5 * r * S * q * q - potential_psi(st, prm);
  const double L_psip = r * C * q;

  // total derivatives along the jet
  const double Dxi = xi.d_rho + q * xi.d_psi + q2 * xi.d_psip;
  const double Deta = eta.d_rho + q * eta.d_psi + q2 * eta.d_psip;
  const double DB = B.d_rho + q * B.d_psi + q2 * B.d_psip;

  const double XL =
      xi.value * L_rho + eta.value * L_psi + (Deta - q * Dxi) * L_psip;
  const double E = el_residual(jet, prm);

  return 2.0 * (XL + L * Dxi - F * E - DB);
}

double noether_charge(const Generator& gen, const State& st,
                      const ModelParams& prm) {
  require_cos(st, "noether_charge");
  const double L = lagrangian(st, prm);
  const double xi = gen.xi(st.rho, st.psi, st.psi_p);
  const double eta = gen.eta(st.rho, st.psi, st.psi_p);
  const double B = gen.B(st.rho, st.psi, st.psi_p);
  return xi * L + (eta - xi * st.psi_p) * momentum(st) - B;
}

std::pair<double, double> hamiltonian(const State& st,
                                      const ModelParams& prm) {
  const double C = require_cos(st, "hamiltonian");
  if (!(st.rho > 0.0)) throw DomainError("hamiltonian: rho must be positive");
  const double p = momentum(st);
  return {p, p * p / (2.0 * st.rho * C) + potential(st, prm)};
}

double hj_residual(double Ip, double rho, double psi, int sign) {
  const double g = radicand(Ip, psi);
  if (g < 0.0) throw DomainError("hj_residual: negative radicand");
  const double C = std::cos(psi);
  if (std::abs(C) < kChartCosMin) {
    throw SingularStateError("hj_residual: cos(psi) ~ 0",
                             State{rho, psi, 0.0});
  }
  const double S = std::sin(psi);
  const double S_rho = -Ip / (2.0 * rho);
  const double S_psi = static_cast<double>(sign) * std::sqrt(g);
  return S_rho + S_psi * S_psi / (2.0 * rho * C) -
         (S / C) * S / (2.0 * rho);
}

double hj_residual_general(double S_rho, double S_psi, const State& st,
                           const ModelParams& prm) {
  const double C = require_cos(st, "hj_residual_general");
  return S_rho + S_psi * S_psi / (2.0 * st.rho * C) + potential(st, prm);
}

double conjugate_time(double Ip, std::pair<double, double> psi_range,
                      double rho, int sign) {
  if (!(rho > 0.0)) throw DomainError("conjugate_time: rho must be positive");
  auto f = [Ip](double psi) {
    const double g = radicand(Ip, psi);
    if (g <= 0.0) throw DomainError("conjugate_time: range leaves the domain");
    return std::cos(psi) / std::sqrt(g);
  };
  const double E =
      integrate_adaptive(f, psi_range.first, psi_range.second, 1e-12).value;
  return 0.5 * (static_cast<double>(sign) * E - std::log(rho));
}

}  // namespace membrane
