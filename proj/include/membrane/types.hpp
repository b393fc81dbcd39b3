#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace membrane {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// The rho-chart (psi as a function of rho) degenerates at vertical tangents.
// Points with |cos psi| below this bound are treated as outside the chart.
inline constexpr double kChartCosMin = 1e-8;

// Model parameters of the reduced second-order equation (c0, lambda_t, p_t,
// omega0) together with the physical constants of the general equation.
// The two sets are kept consistent: lambda_t = lambda_phys/kc + c0^2/2 and
// p_t = p_phys/kc.
struct ModelParams {
  double c0 = 0.0;        // spontaneous curvature            [1/L]
  double lambda_t = 0.0;  // reduced tension                  [1/L^2]
  double p_t = 0.0;       // reduced pressure                 [1/L^3]
  double omega0 = 0.0;    // axial-tension first integral     [1/L]

  double kc = 1.0;           // bending modulus               [E]
  double kbar = 0.0;         // Gaussian modulus              [E]
  double lambda_phys = 0.0;  // tension                       [E/L^2]
  double p_phys = 0.0;       // pressure                      [E/L^3]
};

// Builds params from the reduced set; physical fields follow from kc.
ModelParams reduced_params(double c0, double lambda_t, double p_t,
                           double omega0, double kc = 1.0);

// Builds params from the physical set; reduced fields follow from kc.
ModelParams physical_params(double kc, double kbar, double lambda_phys,
                            double p_phys, double c0 = 0.0,
                            double omega0 = 0.0);

// True when the reduced and physical fields satisfy the defining relations.
bool params_consistent(const ModelParams& p, double tol = 1e-12);

// A point of the rho-chart jet: psi and its rho-derivative at radius rho.
// z is the accumulated height; NaN when not tracked.
struct State {
  double rho = 0.0;    // radius, > 0
  double psi = 0.0;    // tangent angle, tan(psi) = dz/drho
  double psi_p = 0.0;  // dpsi/drho
  double z = kNaN;     // height, optional
};

// Arc-length-chart point for shapes with vertical tangents. s-derivatives of
// psi beyond the first are optional (NaN when absent).
struct ParametricPoint {
  double s = 0.0;
  double rho = 0.0;
  double z = 0.0;
  double psi = 0.0;
  double psi_dot = 0.0;      // dpsi/ds
  double psi_ddot = kNaN;    // d2psi/ds2
  double psi_dddot = kNaN;   // d3psi/ds3
};

// Second-order jet in the rho-chart.
struct Jet2 {
  double rho = 0.0;
  double psi = 0.0;
  double psi_p = 0.0;
  double psi_pp = 0.0;

  State state() const { return State{rho, psi, psi_p, kNaN}; }
  static Jet2 of(const State& st, double psi_pp) {
    return Jet2{st.rho, st.psi, st.psi_p, psi_pp};
  }
};

// Third-order jet in the rho-chart.
struct Jet3 {
  double rho = 0.0;
  double psi = 0.0;
  double psi_p = 0.0;
  double psi_pp = 0.0;
  double psi_ppp = 0.0;

  Jet2 jet2() const { return Jet2{rho, psi, psi_p, psi_pp}; }
};

enum class Chart { Rho, Psi, Parametric };
enum class Termination { SpanEnd, TurningPoint, Axis, Singular };

std::string to_string(Chart c);
std::string to_string(Termination t);
Chart chart_from_string(const std::string& s);
Termination termination_from_string(const std::string& s);

// One row of a profile. t is the chart's independent variable (rho, psi, or
// s). dpsi is dpsi/drho in the rho- and psi-charts and dpsi/ds in the
// parametric chart; NaN where the chart makes it undefined. Diagnostic
// columns (I, omega_eff, Q_scale) are NaN where undefined.
struct ProfilePoint {
  double t = 0.0;
  double rho = 0.0;
  double psi = 0.0;
  double dpsi = kNaN;
  double z = kNaN;
  double I = kNaN;          // dilation first integral sample
  double omega_eff = kNaN;  // effective axial first integral sample
  double Q_scale = kNaN;    // scale charge sample

  State state() const { return State{rho, psi, dpsi, z}; }
};

// Ordered point sequence with chart metadata. Points are strictly monotone
// in t. branch_sign labels the quadrature branch (+1 or -1); rho0 is the
// scale constant of that branch (for other charts, the initial radius).
struct Profile {
  Chart chart = Chart::Rho;
  ModelParams params;
  int branch_sign = +1;
  double rho0 = kNaN;
  Termination termination = Termination::SpanEnd;
  std::vector<ProfilePoint> points;

  // integrator metadata; zero/NaN for analytic or quadrature profiles
  int steps_accepted = 0;
  int steps_rejected = 0;
  double tol = kNaN;
};

// Raised when an evaluation leaves its chart of validity (vertical tangent,
// axis, nonpositive radius). Carries the offending state.
class SingularStateError : public std::runtime_error {
 public:
  SingularStateError(const std::string& what, const State& st)
      : std::runtime_error(what), state(st) {}
  State state;
};

// Raised on evaluations outside a mathematical domain (negative radicand,
// |sin psi| >= 1, span outside a branch domain).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace membrane
