#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "membrane/appendix.hpp"
#include "membrane/quadrature.hpp"
#include "membrane/scan.hpp"
#include "membrane/types.hpp"
#include "membrane/variational.hpp"
#include "membrane/verify.hpp"

using namespace membrane;

namespace {

AnsatzGenerator constant_c1(double c1, double c3) {
  AnsatzGenerator a = trivial_ansatz(c3);
  a.C1 = [c1](double) { return c1; };
  a.C1p = [](double) { return 0.0; };
  a.C1pp = [](double) { return 0.0; };
  return a;
}

AnsatzGenerator linear_c2() {
  AnsatzGenerator a = trivial_ansatz(0.0);
  a.C2 = [](double rho) { return rho; };
  a.C2p = [](double) { return 1.0; };
  a.C2pp = [](double) { return 0.0; };
  return a;
}

}  // namespace

TEST_CASE("series coefficients follow the quarter-shifted ratio recurrence") {
  CHECK(series_coefficient(0) == 1.0);
  CHECK(series_coefficient(1) == 0.25);
  CHECK(series_coefficient(2) == 0.15625);
  CHECK(series_coefficient(3) == 0.1171875);
  // Consistency of consecutive ratios.
  for (int n = 0; n < 30; ++n) {
    CHECK(series_coefficient(n + 1) ==
          doctest::Approx(series_coefficient(n) * (n + 0.25) / (n + 1.0))
              .epsilon(1e-15));
  }
}

TEST_CASE("truncated square-root-secant series against direct evaluation") {
  CHECK(series_sqrt_sec(0.0, 1) == 1.0);
  CHECK(series_sqrt_sec(0.0, 80) == 1.0);
  const double direct = 1.0 / std::sqrt(std::cos(std::asin(0.5)));
  CHECK(std::abs(series_sqrt_sec(0.5, 50) - direct) <= 1e-12);
  CHECK_THROWS_AS(series_sqrt_sec(1.0, 50), DomainError);
  CHECK_THROWS_AS(series_sqrt_sec(-1.1, 50), DomainError);
}

TEST_CASE("truncated antiderivative series against adaptive quadrature") {
  CHECK(series_int_sqrt_cos(0.0, 50, 2.5) == 2.5);
  // Leading term has unit coefficient.
  CHECK(series_int_sqrt_cos(0.3, 1, 0.0) == doctest::Approx(0.3).epsilon(1e-15));
  const QuadratureResult q = integrate_adaptive(
      [](double psi) { return std::sqrt(std::cos(psi)); }, 0.0, std::asin(0.5),
      1e-13);
  REQUIRE(q.converged);
  CHECK(std::abs(series_int_sqrt_cos(0.5, 50, 0.0) - q.value) <= 1e-10);
  CHECK_THROWS_AS(series_int_sqrt_cos(1.0, 50, 0.0), DomainError);
}

TEST_CASE("convergence envelope of the 50-term truncations") {
  // Both series reach 1e-10 up to |sin psi| = 0.8 ...
  const CheckResult ok = verify_checks::series_approx(0.8, 50, 1e-10);
  CHECK(ok.pass);
  // ... but not at 0.9: the truncation floor there is around 2e-6, which is
  // a property of the series, not of the implementation.
  const double direct9 = 1.0 / std::sqrt(std::cos(std::asin(0.9)));
  const double err9 = std::abs(series_sqrt_sec(0.9, 50) - direct9);
  CHECK(err9 > 1e-10);
  CHECK(err9 < 1e-5);
  // More terms push the floor back below 1e-12.
  CHECK(std::abs(series_sqrt_sec(0.9, 120) - direct9) <= 1e-12);
}

TEST_CASE("restricted generators expand as specified") {
  // The trivial family is the plain dilation.
  const Generator dil = ansatz_to_generator(trivial_ansatz(2.0));
  CHECK(dil.xi(1.7, 0.3, 0.1) == doctest::Approx(3.4).epsilon(1e-15));
  CHECK(dil.eta(1.7, 0.3, 0.1) == 0.0);
  CHECK(dil.B(1.7, 0.3, 0.1) == 0.0);
  CHECK(dil.F(1.7, 0.3, 0.1) == 0.0);

  // C2 = rho gives eta = rho / sqrt(cos psi).
  const Generator g2 = ansatz_to_generator(linear_c2());
  CHECK(g2.eta(2.0, 0.5, 0.0) ==
        doctest::Approx(2.0 / std::sqrt(std::cos(0.5))).epsilon(1e-12));
  CHECK(g2.xi(2.0, 0.5, 0.0) == 0.0);

  // Constant C1 feeds the logarithmic radial part: xi = 2 rho ln rho.
  const Generator g1 = ansatz_to_generator(constant_c1(1.0, 0.0));
  CHECK(g1.xi(2.0, 0.1, 0.0) ==
        doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-11));
  CHECK(g1.xi(1.0, 0.1, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("analytic generator partials agree with finite differences") {
  AnsatzGenerator a = constant_c1(1.0, 0.5);
  a.C2 = [](double rho) { return rho * rho; };
  a.C2p = [](double rho) { return 2.0 * rho; };
  a.C2pp = [](double) { return 2.0; };
  const Generator gen = ansatz_to_generator(a);
  REQUIRE(gen.has_partials);

  const double rho = 1.4, psi = 0.6, h = 1e-6;
  auto fd_rho = [&](const Field3& f) {
    return (f(rho + h, psi, 0.0) - f(rho - h, psi, 0.0)) / (2.0 * h);
  };
  auto fd_psi = [&](const Field3& f) {
    return (f(rho, psi + h, 0.0) - f(rho, psi - h, 0.0)) / (2.0 * h);
  };
  CHECK(gen.partials.xi_rho(rho, psi, 0.0) ==
        doctest::Approx(fd_rho(gen.xi)).epsilon(1e-6));
  CHECK(gen.partials.eta_rho(rho, psi, 0.0) ==
        doctest::Approx(fd_rho(gen.eta)).epsilon(1e-6));
  CHECK(gen.partials.eta_psi(rho, psi, 0.0) ==
        doctest::Approx(fd_psi(gen.eta)).epsilon(1e-6));
  CHECK(gen.partials.B_rho(rho, psi, 0.0) ==
        doctest::Approx(fd_rho(gen.B)).epsilon(1e-6));
  CHECK(gen.partials.B_psi(rho, psi, 0.0) ==
        doctest::Approx(fd_psi(gen.B)).epsilon(1e-6));
  CHECK(gen.partials.xi_psi(rho, psi, 0.0) == 0.0);
  CHECK(gen.partials.eta_psip(rho, psi, 0.0) == 0.0);
}

TEST_CASE("rigidity scan passes only the trivial generator at the origin") {
  const ModelParams origin = reduced_params(0.0, 0.0, 0.0, 0.0);
  const RigidityReport at_origin = rigidity_scan(origin, {});
  REQUIRE(!at_origin.trials.empty());
  CHECK(at_origin.trials.front().name == "trivial");
  CHECK(at_origin.trivial_passes);
  CHECK(at_origin.trials.front().max_residual <= 1e-10);

  // The same residual function backs the variational-module grid check.
  const double grid_max =
      dilation_noether_grid_max(origin, standard_grid(), true);
  CHECK(std::abs(at_origin.trials.front().max_residual - grid_max) <= 1e-15);

  // Spontaneous curvature alone breaks the trivial generator.
  const RigidityReport broken =
      rigidity_scan(reduced_params(0.2, 0.0, 0.0, 0.0), {});
  CHECK(!broken.trivial_passes);
  CHECK(broken.trials.front().max_residual > 1e-3);

  // A logarithmic trial fails under tension, and already at the origin.
  const std::vector<std::pair<std::string, AnsatzGenerator>> trials{
      {"log-radial", constant_c1(1.0, 1.0)}};
  const RigidityReport tension =
      rigidity_scan(reduced_params(0.0, 0.5, 0.0, 0.0), trials);
  REQUIRE(tension.trials.size() == 2);
  CHECK(tension.trials.back().max_anchored >= 1e-4);
  CHECK(tension.all_others_fail);
  const RigidityReport origin_trial = rigidity_scan(origin, trials);
  CHECK(origin_trial.trials.back().max_anchored >= 1e-4);
  CHECK(origin_trial.trivial_passes);
}

TEST_CASE("coefficient relations for the quadratic-free family") {
  // At the origin both closed forms for C2 vanish identically.
  const CoefficientRelationsReport origin = coefficient_relations_check(
      reduced_params(0.0, 0.0, 0.0, 0.0), trivial_ansatz(1.0),
      {0.5, 1.1, 2.3});
  CHECK(origin.forms_agree);
  CHECK(origin.obstruction_zero);
  CHECK(origin.consistent);
  CHECK(origin.max_gap <= 1e-14);

  // Forcing the forms to agree pins omega0 = -(3/5) c0 with zero pressure
  // and tension; both then give C2 = c0 C3 rho / 8, and the leftover
  // c0 * C2 obstruction rules even that out.
  const CoefficientRelationsReport chain = coefficient_relations_check(
      reduced_params(1.0, 0.0, 0.0, -0.6), trivial_ansatz(1.0),
      {0.5, 1.1, 2.3});
  CHECK(chain.forms_agree);
  for (std::size_t i = 0; i < chain.rho_samples.size(); ++i) {
    CHECK(chain.c2_first[i] ==
          doctest::Approx(chain.rho_samples[i] / 8.0).epsilon(1e-12));
  }
  CHECK(!chain.obstruction_zero);
  CHECK(chain.max_obstruction > 0.01);
  CHECK(!chain.consistent);

  // Generic parameters: the two forms disagree at most sample radii.
  const CoefficientRelationsReport generic = coefficient_relations_check(
      reduced_params(0.3, 0.2, 0.1, 0.4), trivial_ansatz(1.0),
      {0.5, 1.1, 2.3});
  int disagreements = 0;
  for (double g : generic.gap) {
    if (std::abs(g) > 1e-8) ++disagreements;
  }
  CHECK(disagreements >= 2);
  CHECK(!generic.forms_agree);

  // The reduction requires C1 = 0.
  CHECK_THROWS_AS(coefficient_relations_check(
                      reduced_params(0.0, 0.0, 0.0, 0.0),
                      constant_c1(1.0, 1.0), {1.0}),
                  DomainError);
}

TEST_CASE("verification wrappers for the lattice and the chain") {
  CHECK(verify_checks::rigidity_trivial_origin(true).pass);
  CHECK(verify_checks::rigidity_lattice_origin(true).pass);
  CHECK(verify_checks::rigidity_lattice_breaking(true).pass);
  CHECK(verify_checks::coeff_forms_origin().pass);
  CHECK(verify_checks::coeff_chain_forms_agree().pass);
  CHECK(verify_checks::coeff_chain_obstruction().pass);
  CHECK(verify_checks::coeff_generic_disagree().pass);
}
