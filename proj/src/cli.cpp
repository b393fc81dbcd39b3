#include "membrane/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "membrane/appendix.hpp"
#include "membrane/catalog.hpp"
#include "membrane/csv.hpp"
#include "membrane/quadrature.hpp"
#include "membrane/shape_eq.hpp"
#include "membrane/verify.hpp"
#include "membrane/willmore.hpp"

namespace membrane {

namespace {

std::map<std::string, double> parse_kv_list(const std::string& text) {
  std::map<std::string, double> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DomainError("bad key=value item '" + item + "'");
    }
    std::size_t pos = 0;
    const std::string value = item.substr(eq + 1);
    out[item.substr(0, eq)] = std::stod(value, &pos);
    if (pos != value.size()) {
      throw DomainError("bad numeric value in '" + item + "'");
    }
    start = end + 1;
  }
  return out;
}

std::string strip_ws(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// CLI11 only applies config files to the command parse() is called on, never
// to subcommands, so plain key=value files are expanded into ordinary
// options up front. Values given on the command line win over the file.
std::vector<std::string> expand_config_args(int argc,
                                            const char* const* argv) {
  std::vector<std::string> out;
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config") {
      if (i + 1 >= argc) throw DomainError("--config needs a file path");
      path = argv[++i];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    } else {
      out.push_back(arg);
    }
  }
  if (path.empty()) return out;

  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::set<std::string> given;
  for (const std::string& arg : out) {
    if (arg.rfind("--", 0) == 0) given.insert(arg.substr(0, arg.find('=')));
  }
  std::string line;
  while (std::getline(in, line)) {
    line = strip_ws(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DomainError("bad config line '" + line + "'");
    }
    const std::string key = strip_ws(line.substr(0, eq));
    if (given.count("--" + key)) continue;
    out.push_back("--" + key + "=" + strip_ws(line.substr(eq + 1)));
  }
  return out;
}

std::string with_I_suffix(const std::string& path, double I) {
  char tag[32];
  std::snprintf(tag, sizeof(tag), "_I%g", I);
  const std::size_t dot = path.find_last_of('.');
  const std::size_t slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + tag;
  }
  return path.substr(0, dot) + tag + path.substr(dot);
}

void emit_profile(const Profile& prof, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << profile_to_csv(prof);
  } else {
    write_profile_csv(out_path, prof);
  }
}

struct SolveArgs {
  double c0 = 0.0, lambda_t = 0.0, p_t = 0.0, omega0 = 0.0, kc = 1.0;
  double rho0 = 1.0, psi0 = 0.0, dpsi0 = 0.0, rho_end = 2.0;
  double tol = 1e-10;
  std::string out;
};

int run_solve(const SolveArgs& a) {
  const ModelParams prm =
      reduced_params(a.c0, a.lambda_t, a.p_t, a.omega0, a.kc);
  const State init{a.rho0, a.psi0, a.dpsi0, 0.0};
  const Profile prof = integrate(init, {a.rho0, a.rho_end}, prm, a.tol);
  emit_profile(prof, a.out);
  if (!a.out.empty()) {
    std::cout << "wrote " << a.out << " (" << prof.points.size()
              << " rows, termination " << to_string(prof.termination)
              << ")\n";
  }
  return 0;
}

struct WillmoreArgs {
  std::vector<double> I_values{0.0};
  double rho0 = 1.0;
  int sign = -1;
  double psi_start = kNaN, psi_end = kNaN;
  int n = 200;
  std::string out;
};

int run_willmore(const WillmoreArgs& a) {
  for (double I : a.I_values) {
    double lo = a.psi_start, hi = a.psi_end;
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      const BranchDomain dom = branch_domain(I);
      if (dom.empty) throw DomainError("empty branch domain");
      const double w = dom.psi_hi - dom.psi_lo;
      if (!std::isfinite(lo)) lo = dom.psi_lo + 0.02 * w;
      if (!std::isfinite(hi)) hi = dom.psi_hi - 0.02 * w;
    }
    const Profile prof = quadrature_profile(I, a.rho0, a.sign, {lo, hi}, a.n);
    std::string path = a.out;
    if (!path.empty() && a.I_values.size() > 1) {
      path = with_I_suffix(path, I);
    }
    emit_profile(prof, path);
    if (!path.empty()) {
      std::cout << "wrote " << path << " (I=" << I << ", " << a.n
                << " rows)\n";
    }
  }
  return 0;
}

struct CatalogArgs {
  std::string name;
  std::string params;
  bool check = false;
  int n = 100;
  std::string out;
};

int run_catalog(const CatalogArgs& a) {
  const CatalogEntry entry = make_catalog_entry(a.name, parse_kv_list(a.params));
  const CatalogResult res = catalog_profile(entry, a.n);
  std::cout << a.name << ": max |shape equation residual| = "
            << format_double(res.max_residual_general)
            << ", constraint residual = "
            << format_double(res.constraint_residual) << "\n";
  for (const std::string& w : res.warnings) std::cout << "warning: " << w << "\n";
  if (!a.out.empty()) {
    write_profile_csv(a.out, res.profile);
    std::cout << "wrote " << a.out << "\n";
  }
  if (a.check) {
    const bool ok = res.constraint_ok && res.max_residual_general <= 1e-9;
    std::cout << (ok ? "check passed" : "check failed") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string report;
  VerifySettings settings;
  double c0_override = kNaN;
  bool serial = false;
};

int run_verify(VerifyArgs a) {
  if (std::isfinite(a.c0_override)) {
    a.settings.has_c0_override = true;
    a.settings.c0_override = a.c0_override;
  }
  a.settings.parallel = !a.serial;
  const VerificationReport rep = run_verification(a.suite, a.settings);
  for (const CheckResult& c : rep.checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << ": " << c.name
              << " (measured " << format_double(c.max_value) << " vs tolerance "
              << format_double(c.tolerance) << ")\n";
  }
  std::cout << rep.summary << "\n";
  if (!a.report.empty()) {
    std::ofstream out(a.report, std::ios::binary);
    if (!out) throw DomainError("cannot open '" + a.report + "' for writing");
    out << report_to_json(rep);
    std::cout << "wrote " << a.report << "\n";
  }
  return report_success(rep, a.settings.expect_broken) ? 0 : 1;
}

struct SeriesArgs {
  int n = 50;
  double sin_psi = 0.5;
  double G = 0.0;
};

int run_series(const SeriesArgs& a) {
  const double direct = std::pow(1.0 - a.sin_psi * a.sin_psi, -0.25);
  auto sqrt_cos = [](double phi) { return std::sqrt(std::cos(phi)); };
  const double oracle =
      a.G +
      integrate_adaptive(sqrt_cos, 0.0, std::asin(a.sin_psi), 1e-14).value;
  const double s_series = series_sqrt_sec(a.sin_psi, a.n);
  const double i_series = series_int_sqrt_cos(a.sin_psi, a.n, a.G);
  nlohmann::ordered_json j;
  j["n_terms"] = a.n;
  j["sin_psi"] = a.sin_psi;
  j["G"] = a.G;
  j["sqrt_sec_series"] = s_series;
  j["sqrt_sec_direct"] = direct;
  j["sqrt_sec_abs_err"] = std::abs(s_series - direct);
  j["int_sqrt_cos_series"] = i_series;
  j["int_sqrt_cos_quadrature"] = oracle;
  j["int_sqrt_cos_abs_err"] = std::abs(i_series - oracle);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Axisymmetric bilayer membrane profiles and self-checks"};
  if (argc > 0) app.name(argv[0]);
  app.require_subcommand(1);
  // Target for the per-subcommand --config help entries; the real file is
  // expanded into options before CLI11 ever parses, so this stays empty.
  std::string config_doc;

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "Integrate the reduced meridian equation over rho");
  solve->add_option("--c0", solve_args.c0, "Spontaneous curvature");
  solve->add_option("--lambda-t", solve_args.lambda_t,
                    "Reduced tension (lambda/kc + c0^2/2)");
  solve->add_option("--pressure-t", solve_args.p_t,
                    "Reduced pressure (p/kc)");
  solve->add_option("--omega0", solve_args.omega0,
                    "First-integration constant");
  solve->add_option("--kc", solve_args.kc, "Bending modulus");
  solve->add_option("--rho0", solve_args.rho0, "Starting radius");
  solve->add_option("--psi0", solve_args.psi0, "Starting tangent angle");
  solve->add_option("--dpsi0", solve_args.dpsi0, "Starting dpsi/drho");
  solve->add_option("--rho-end", solve_args.rho_end, "Target radius");
  solve->add_option("--tol", solve_args.tol, "Integration tolerance");
  solve->add_option("--out", solve_args.out, "Output CSV path");
  solve->add_option("--config", config_doc,
                    "Read options from a key=value file");

  WillmoreArgs willmore_args;
  CLI::App* willmore = app.add_subcommand(
      "willmore", "Tension-free branches from the conserved quantity I");
  willmore->add_option("--I", willmore_args.I_values,
                       "Conserved-quantity values (one CSV per value)");
  willmore->add_option("--rho0", willmore_args.rho0,
                       "Radius at psi = pi/2");
  willmore->add_option("--sign", willmore_args.sign,
                       "Branch sign: -1 sphere-like, +1 catenoid-like")
      ->check(CLI::IsMember({-1, 1}));
  willmore->add_option("--psi-start", willmore_args.psi_start,
                       "Start angle (default: branch domain edge)");
  willmore->add_option("--psi-end", willmore_args.psi_end,
                       "End angle (default: branch domain edge)");
  willmore->add_option("--n", willmore_args.n, "Number of samples");
  willmore->add_option("--out", willmore_args.out, "Output CSV path");
  willmore->add_option("--config", config_doc,
                       "Read options from a key=value file");

  CatalogArgs catalog_args;
  CLI::App* catalog = app.add_subcommand(
      "catalog", "Named analytic surfaces with their parameter constraints");
  catalog->add_option("--name", catalog_args.name, "Catalog entry name")
      ->required()
      ->check(CLI::IsMember(catalog_names()));
  catalog->add_option("--params", catalog_args.params,
                      "Comma-separated key=value overrides");
  catalog->add_flag("--check", catalog_args.check,
                    "Exit nonzero unless the residual check passes");
  catalog->add_option("--n", catalog_args.n, "Number of samples");
  catalog->add_option("--out", catalog_args.out, "Output CSV path");
  catalog->add_option("--config", config_doc,
                      "Read options from a key=value file");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run invariant suites and emit a JSON report");
  verify->add_option("--suite", verify_args.suite,
                     "first-integral|noether|hj|stress|closure|appendix|all");
  verify->add_option("--report", verify_args.report, "JSON report path");
  verify->add_option("--seed", verify_args.settings.seed, "Random seed");
  verify->add_option("--tol-integrate", verify_args.settings.tol_integrate,
                     "Integration tolerance used inside checks");
  verify->add_option("--n-random", verify_args.settings.n_random,
                     "Random jets per algebraic check");
  verify->add_option("--n-trajectories",
                     verify_args.settings.n_trajectories,
                     "Trajectories for conservation checks");
  verify->add_flag("--expect-broken", verify_args.settings.expect_broken,
                   "Succeed only if at least one check fails");
  verify->add_option("--c0", verify_args.c0_override,
                     "Override c0 in the symmetry residual grid");
  verify->add_flag("--serial", verify_args.serial,
                   "Disable parallel grid evaluation");
  verify->add_option("--config", config_doc,
                     "Read options from a key=value file");

  SeriesArgs series_args;
  CLI::App* series = app.add_subcommand(
      "series", "Evaluate the sqrt(sec)/int sqrt(cos) truncations");
  series->add_option("--n", series_args.n, "Number of series terms");
  series->add_option("--sin-psi", series_args.sin_psi,
                     "Evaluation point sin(psi), |.| < 1");
  series->add_option("--G", series_args.G, "Integration constant");
  series->add_option("--config", config_doc,
                     "Read options from a key=value file");

  std::vector<std::string> args;
  try {
    args = expand_config_args(argc, argv);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::reverse(args.begin(), args.end());  // parse(vector) pops from the back

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (willmore->parsed()) return run_willmore(willmore_args);
    if (catalog->parsed()) return run_catalog(catalog_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (series->parsed()) return run_series(series_args);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SingularStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace membrane
