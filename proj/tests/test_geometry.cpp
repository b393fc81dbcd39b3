#include <cmath>
#include <vector>

#include "doctest.h"
#include "membrane/geometry.hpp"
#include "membrane/types.hpp"
#include "membrane/willmore.hpp"

using namespace membrane;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Analytic sphere of radius R traced as rho = R sin(psi).
State sphere_state(double R, double psi) {
  return State{R * std::sin(psi), psi, 1.0 / (R * std::cos(psi)), kNaN};
}

}  // namespace

TEST_CASE("parameter factories keep reduced and physical fields consistent") {
  const ModelParams r = reduced_params(0.2, 0.3, 0.1, 0.05, 2.0);
  CHECK(r.c0 == 0.2);
  CHECK(r.lambda_t == 0.3);
  CHECK(r.p_t == 0.1);
  CHECK(r.omega0 == 0.05);
  CHECK(r.kc == 2.0);
  // lambda_t = lambda/kc + c0^2/2 and p_t = p/kc hold by construction.
  CHECK(r.lambda_phys == doctest::Approx(2.0 * (0.3 - 0.5 * 0.04)).epsilon(1e-15));
  CHECK(r.p_phys == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(params_consistent(r));

  const ModelParams p = physical_params(2.0, 0.1, 0.5, 0.3, 0.4, 0.1);
  CHECK(p.kbar == 0.1);
  CHECK(p.lambda_t == doctest::Approx(0.5 / 2.0 + 0.5 * 0.16).epsilon(1e-15));
  CHECK(p.p_t == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(params_consistent(p));

  ModelParams broken = r;
  broken.lambda_phys += 1e-6;
  CHECK(!params_consistent(broken));

  CHECK_THROWS_AS(reduced_params(0.0, 0.0, 0.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(physical_params(-1.0, 0.0, 0.0, 0.0), DomainError);
}

TEST_CASE("curvatures of the reference shapes") {
  // Sphere point at psi = pi/4, R = 1: both principal curvatures are -1.
  const Curvatures cs = curvatures(sphere_state(1.0, kPi / 4.0));
  CHECK(cs.two_H == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(cs.K == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(principal_meridional(sphere_state(1.0, kPi / 4.0)) ==
        doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(principal_azimuthal(std::sin(kPi / 4.0), kPi / 4.0) ==
        doctest::Approx(-1.0).epsilon(1e-14));

  // Cylinder of radius 2 through the vertical tangent: only the azimuthal
  // curvature survives.
  ParametricPoint cyl;
  cyl.rho = 2.0;
  cyl.psi = kPi / 2.0;
  cyl.psi_dot = 0.0;
  const Curvatures cc = curvatures(cyl);
  CHECK(cc.two_H == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(cc.K == 0.0);
  CHECK(principal_meridional(cyl) == 0.0);

  // Flat disc.
  const Curvatures cf = curvatures(State{3.0, 0.0, 0.0, kNaN});
  CHECK(cf.two_H == 0.0);
  CHECK(cf.K == 0.0);

  CHECK_THROWS_AS(curvatures(State{0.0, 0.1, 0.0, kNaN}), DomainError);
  ParametricPoint bad;
  bad.rho = -1.0;
  CHECK_THROWS_AS(curvatures(bad), DomainError);
}

TEST_CASE("meridional Laplacian on axisymmetric scalars") {
  // Linear f at psi = 0 reduces to the planar radial Laplacian a/rho.
  CHECK(laplacian_meridional(2.0, 0.0, 0.0, 3.0, 0.0) ==
        doctest::Approx(1.5).epsilon(1e-15));
  // Constant f.
  CHECK(laplacian_meridional(1.3, 0.4, 0.2, 0.0, 0.0) == 0.0);
  // f = rho^2 at psi = pi/6, psi' = 0, rho = 1: cos^2 * (2 + 2).
  CHECK(laplacian_meridional(1.0, kPi / 6.0, 0.0, 2.0, 2.0) ==
        doctest::Approx(3.0).epsilon(1e-15));
  // Flat chart: the 2d Laplacian of rho^2 is 4 at every radius.
  for (double rho : {0.5, 1.0, 2.5}) {
    CHECK(laplacian_meridional(rho, 0.0, 0.0, 2.0 * rho, 2.0) ==
          doctest::Approx(4.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(laplacian_meridional(1.0, kPi / 2.0, 0.0, 1.0, 0.0),
                  DomainError);
}

TEST_CASE("height accumulation along a flat profile is identically zero") {
  Profile prof;
  prof.chart = Chart::Rho;
  for (int i = 0; i <= 10; ++i) {
    ProfilePoint pt;
    pt.t = pt.rho = 0.5 + 0.1 * i;
    pt.psi = 0.0;
    pt.dpsi = 0.0;
    prof.points.push_back(pt);
  }
  const Profile filled = accumulate_z(prof);
  for (const ProfilePoint& pt : filled.points) CHECK(pt.z == 0.0);
}

TEST_CASE("height accumulation recovers the sphere cap height") {
  // rho = sin(psi), z = -cos(psi) + const on the unit sphere.
  Profile prof;
  prof.chart = Chart::Rho;
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const double psi = 0.1 + (1.0 - 0.1) * i / n;
    ProfilePoint pt;
    pt.t = pt.rho = std::sin(psi);
    pt.psi = psi;
    pt.dpsi = 1.0 / std::cos(psi);
    prof.points.push_back(pt);
  }
  const Profile filled = accumulate_z(prof);
  for (std::size_t i = 0; i < filled.points.size(); ++i) {
    const double psi = filled.points[i].psi;
    const double z_true = std::cos(0.1) - std::cos(psi);
    CHECK(std::abs(filled.points[i].z - z_true) <= 1e-9);
  }
}

TEST_CASE("height accumulation along a cylinder meridian is arc length") {
  Profile prof;
  prof.chart = Chart::Parametric;
  for (int i = 0; i <= 20; ++i) {
    ProfilePoint pt;
    pt.t = i / 20.0;
    pt.rho = 2.0;
    pt.psi = kPi / 2.0;
    pt.dpsi = 0.0;  // dpsi/ds
    prof.points.push_back(pt);
  }
  const Profile filled = accumulate_z(prof);
  for (const ProfilePoint& pt : filled.points) {
    CHECK(pt.z == doctest::Approx(pt.t).epsilon(1e-15));
  }
}

TEST_CASE("height accumulation in the psi-chart matches the quadrature") {
  Profile prof = quadrature_profile(0.5, 1.0, -1, {0.3, 1.4}, 101);
  Profile stripped = prof;
  for (ProfilePoint& pt : stripped.points) pt.z = kNaN;
  const Profile filled = accumulate_z(stripped, prof.points.front().z);
  for (std::size_t i = 0; i < prof.points.size(); ++i) {
    CHECK(std::abs(filled.points[i].z - prof.points[i].z) <= 1e-8);
  }
}

TEST_CASE("height accumulation offset and failure modes") {
  Profile prof;
  prof.chart = Chart::Rho;
  ProfilePoint a;
  a.t = a.rho = 1.0;
  a.psi = 0.2;
  a.dpsi = 0.0;
  ProfilePoint b = a;
  b.t = b.rho = 1.5;
  prof.points = {a, b};
  const Profile shifted = accumulate_z(prof, 2.0);
  CHECK(shifted.points.front().z == 2.0);
  CHECK(shifted.points.back().z ==
        doctest::Approx(2.0 + 0.5 * std::tan(0.2)).epsilon(1e-12));

  Profile one;
  one.points = {a};
  CHECK_THROWS_AS(accumulate_z(one), DomainError);

  Profile turning = prof;
  turning.points[1].psi = kPi / 2.0;
  CHECK_THROWS_AS(accumulate_z(turning), SingularStateError);
}

TEST_CASE("chart and termination labels round-trip") {
  for (Chart c : {Chart::Rho, Chart::Psi, Chart::Parametric}) {
    CHECK(chart_from_string(to_string(c)) == c);
  }
  for (Termination t : {Termination::SpanEnd, Termination::TurningPoint,
                        Termination::Axis, Termination::Singular}) {
    CHECK(termination_from_string(to_string(t)) == t);
  }
  CHECK(to_string(Chart::Rho) == "rho");
  CHECK(to_string(Termination::TurningPoint) == "turning-point");
  CHECK_THROWS_AS(chart_from_string("zeta"), DomainError);
  CHECK_THROWS_AS(termination_from_string("done"), DomainError);
}

TEST_CASE("jet views expose their lower-order parts") {
  const Jet3 j3{1.2, 0.3, -0.4, 0.5, -0.6};
  const Jet2 j2 = j3.jet2();
  CHECK(j2.rho == 1.2);
  CHECK(j2.psi_pp == 0.5);
  const State st = j2.state();
  CHECK(st.psi_p == -0.4);
  CHECK(!std::isfinite(st.z));
  const Jet2 rebuilt = Jet2::of(st, 0.5);
  CHECK(rebuilt.psi_pp == 0.5);
  CHECK(rebuilt.rho == 1.2);
}
