#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "membrane/catalog.hpp"
#include "membrane/cli.hpp"
#include "membrane/csv.hpp"
#include "membrane/geometry.hpp"
#include "membrane/shape_eq.hpp"
#include "membrane/types.hpp"
#include "membrane/verify.hpp"

using namespace membrane;

namespace {

// Runs the CLI in-process with captured stdout/stderr.
struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("membrane");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  CliRun run;
  run.exit_code = cli_main(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("catalog names are stable and entries satisfy their equations") {
  const std::vector<std::string> expected{
      "sphere",       "catenoid",       "cylinder",
      "unduloid-constraint", "clifford-torus", "flat-disc"};
  CHECK(catalog_names() == expected);

  for (const std::string& name : catalog_names()) {
    const CatalogResult res = catalog_profile(make_catalog_entry(name));
    CAPTURE(name);
    CHECK(res.constraint_ok);
    CHECK(res.warnings.empty());
    CHECK(res.max_residual_general <= 1e-9);
    CHECK(res.profile.points.size() == 100);
    CHECK(res.profile.chart == Chart::Parametric);
  }

  // The default sphere is a zero-parameter solution with zero invariant.
  const CatalogResult sph = catalog_profile(make_catalog_entry("sphere"));
  CHECK(sph.max_residual_general <= 1e-12);
  for (const ProfilePoint& pt : sph.profile.points) {
    if (!std::isfinite(pt.I)) continue;
    CHECK(std::abs(pt.I) <= 1e-12);
  }
}

TEST_CASE("off-ratio torus produces a warning but still a profile") {
  const CatalogResult res = catalog_profile(
      make_catalog_entry("clifford-torus", {{"ratio", 1.5}}));
  CHECK(!res.constraint_ok);
  CHECK(!res.warnings.empty());
  CHECK(res.max_residual_general >= 1e-2);
  CHECK(res.profile.points.size() == 100);

  const CatalogResult good = catalog_profile(make_catalog_entry("clifford-torus"));
  CHECK(good.constraint_ok);
  CHECK(good.max_residual_general <= 1e-9);
}

TEST_CASE("catalog entry construction validates keys and applies overrides") {
  CHECK_THROWS_AS(make_catalog_entry("moebius"), DomainError);
  CHECK_THROWS_AS(make_catalog_entry("sphere", {{"radius", 1.0}}), DomainError);
  CHECK_THROWS_AS(make_catalog_entry("sphere", {{"R", -1.0}}), DomainError);

  const CatalogEntry entry = make_catalog_entry(
      "sphere", {{"c0", 0.5}, {"lambda", 0.3}, {"p", 0.15}});
  CHECK(entry.params.c0 == 0.5);
  CHECK(entry.params.lambda_phys == 0.3);
  CHECK(entry.params.p_phys == 0.15);
  CHECK(catalog_profile(entry).constraint_ok);

  // Dependent defaults: the cylinder picks the tension that balances it.
  const CatalogEntry cyl = make_catalog_entry("cylinder", {{"R", 2.0}});
  CHECK(cyl.params.lambda_phys == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
  CHECK(catalog_profile(cyl).constraint_ok);
}

TEST_CASE("meridional Laplacian of the mean curvature matches differences") {
  const CatalogResult res =
      catalog_profile(make_catalog_entry("clifford-torus"), 400);
  std::vector<double> H(res.jets.size());
  for (std::size_t i = 0; i < res.jets.size(); ++i) {
    H[i] = 0.5 * curvatures(res.jets[i]).two_H;
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < res.jets.size(); ++i) {
    const ParametricPoint& pt = res.jets[i];
    const double h = res.jets[i + 1].s - res.jets[i].s;
    const double Hp = (H[i + 1] - H[i - 1]) / (2.0 * h);
    const double Hpp = (H[i + 1] - 2.0 * H[i] + H[i - 1]) / (h * h);
    const double fd = Hpp + std::cos(pt.psi) / pt.rho * Hp;
    worst = std::max(worst, std::abs(laplacian_mean_curvature(pt) - fd));
  }
  // Central differences on this grid carry ~1e-3 truncation; the analytic
  // value itself is of order 4, so this still pins sign and both terms.
  CHECK(worst <= 2e-3);
}

TEST_CASE("profiles round-trip through CSV byte for byte") {
  // An integrated trajectory: full diagnostic columns.
  const ModelParams par = reduced_params(0.1, 0.05, 0.0, 0.1);
  const Profile traj =
      integrate(State{1.0, 0.2, 0.3, 0.0}, {1.0, 1.6}, par, 1e-10);
  // A parametric catalog profile: vertical tangents leave empty cells.
  const Profile cyl = catalog_profile(make_catalog_entry("cylinder")).profile;

  for (const Profile* prof : {&traj, &cyl}) {
    const std::string csv1 = profile_to_csv(*prof);
    const Profile back = profile_from_csv(csv1);
    const std::string csv2 = profile_to_csv(back);
    CHECK(csv1 == csv2);
    CHECK(back.points.size() == prof->points.size());
    CHECK(back.chart == prof->chart);
    CHECK(back.termination == prof->termination);
    CHECK(back.params.c0 == prof->params.c0);
  }

  // The cylinder profile really does exercise the empty-cell path.
  bool saw_empty = false;
  for (const ProfilePoint& pt : cyl.points) {
    if (!std::isfinite(pt.I)) saw_empty = true;
  }
  CHECK(saw_empty);

  // Header and metadata layout.
  const std::string csv = profile_to_csv(traj);
  CHECK(csv.rfind("# chart=rho;branch_sign=1;rho0=1;", 0) == 0);
  CHECK(csv.find("t,rho,psi,dpsi,z,I,omega_eff,Q_scale\n") != std::string::npos);
  CHECK(csv.find("termination=span-end") != std::string::npos);

  // File variant.
  const auto path = temp_file("membrane_test_roundtrip.csv");
  write_profile_csv(path.string(), traj);
  const Profile from_file = read_profile_csv(path.string());
  CHECK(profile_to_csv(from_file) == csv);
  std::filesystem::remove(path);
}

TEST_CASE("seventeen-digit decimals preserve doubles exactly") {
  for (double v : {0.1, -1.0 / 3.0, 1e-17, 6.02214076e23, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(kNaN) == "nan");
  CHECK(format_double(kNaN, true) == "");
}

TEST_CASE("verification reports are deterministic and serializable") {
  const VerificationReport a = run_verification("hj");
  const VerificationReport b = run_verification("hj");
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(a.all_pass());

  const auto parsed = nlohmann::json::parse(report_to_json(a));
  CHECK(parsed["suite"] == "hj");
  CHECK(parsed["checks"].is_array());
  CHECK(parsed["checks"].size() == a.checks.size());
  for (const auto& chk : parsed["checks"]) {
    CHECK(chk.contains("name"));
    CHECK(chk.contains("max_value"));
    CHECK(chk.contains("tolerance"));
    CHECK(chk.contains("pass"));
  }
  CHECK(parsed.contains("settings"));
  CHECK(parsed.contains("summary"));

  CHECK_THROWS_AS(run_verification("everything"), DomainError);
}

TEST_CASE("expected-failure semantics of verification reports") {
  const VerificationReport ok = run_verification("hj");
  CHECK(report_success(ok, false));
  CHECK(!report_success(ok, true));

  VerifySettings broken;
  broken.has_c0_override = true;
  broken.c0_override = 0.5;
  const VerificationReport bad = run_verification("noether", broken);
  CHECK(!bad.all_pass());
  CHECK(report_success(bad, true));
  CHECK(!report_success(bad, false));
}

TEST_CASE("command line: usage errors, checks, and outputs") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"bogus"}).exit_code == 2);
  CHECK(run_cli({"--help"}).exit_code == 0);
  CHECK(run_cli({"catalog", "--name", "nonagon"}).exit_code == 2);
  CHECK(run_cli({"verify", "--suite", "bogus"}).exit_code == 2);
  CHECK(run_cli({"willmore", "--I=0.5", "--sign", "2"}).exit_code == 2);

  const CliRun check_ok =
      run_cli({"catalog", "--name", "sphere", "--check"});
  CHECK(check_ok.exit_code == 0);
  CHECK(check_ok.out.find("sphere") != std::string::npos);

  const CliRun check_bad = run_cli({"catalog", "--name", "clifford-torus",
                                    "--params", "ratio=1.5", "--check"});
  CHECK(check_bad.exit_code == 1);

  CHECK(run_cli({"catalog", "--name", "sphere", "--params", "R=-1"})
            .exit_code == 2);

  const CliRun verify_run = run_cli({"verify", "--suite", "hj"});
  CHECK(verify_run.exit_code == 0);
  CHECK(verify_run.out.find("PASS") != std::string::npos);

  const CliRun series_run =
      run_cli({"series", "--n", "50", "--sin-psi", "0.5"});
  CHECK(series_run.exit_code == 0);

  // Broken symmetry: failure unless explicitly expected.
  CHECK(run_cli({"verify", "--suite", "noether", "--c0", "0.5"}).exit_code ==
        1);
  CHECK(run_cli({"verify", "--suite", "noether", "--c0", "0.5",
                 "--expect-broken"})
            .exit_code == 0);
}

TEST_CASE("command line: solve and willmore write CSV files") {
  const auto solve_path = temp_file("membrane_test_solve.csv");
  const CliRun solved =
      run_cli({"solve", "--rho0", "1", "--psi0", "0.2", "--dpsi0", "0.3",
               "--rho-end", "1.5", "--out", solve_path.string()});
  CHECK(solved.exit_code == 0);
  REQUIRE(std::filesystem::exists(solve_path));
  const Profile prof = read_profile_csv(solve_path.string());
  CHECK(prof.chart == Chart::Rho);
  CHECK(prof.points.front().rho == 1.0);
  CHECK(prof.points.back().rho == doctest::Approx(1.5).epsilon(1e-12));
  std::filesystem::remove(solve_path);

  // One file per requested invariant value.
  const auto fig_path = temp_file("membrane_test_fig.csv");
  const CliRun fig = run_cli({"willmore", "--I=0.3", "--I=-0.3", "--out",
                              fig_path.string()});
  CHECK(fig.exit_code == 0);
  const auto fig_a = temp_file("membrane_test_fig_I0.3.csv");
  const auto fig_b = temp_file("membrane_test_fig_I-0.3.csv");
  REQUIRE(std::filesystem::exists(fig_a));
  REQUIRE(std::filesystem::exists(fig_b));
  const Profile pa = read_profile_csv(fig_a.string());
  CHECK(pa.chart == Chart::Psi);
  CHECK(pa.points.front().I == 0.3);
  std::filesystem::remove(fig_a);
  std::filesystem::remove(fig_b);

  // A single value writes exactly the requested path.
  const CliRun one = run_cli({"willmore", "--I=0.4", "--out",
                              fig_path.string()});
  CHECK(one.exit_code == 0);
  REQUIRE(std::filesystem::exists(fig_path));
  std::filesystem::remove(fig_path);
}

TEST_CASE("command line: flags can come from a config file") {
  const auto cfg_path = temp_file("membrane_test_cfg.ini");
  {
    std::ofstream cfg(cfg_path);
    cfg << "name=sphere\n";
  }
  const CliRun run =
      run_cli({"catalog", "--config", cfg_path.string(), "--check"});
  CHECK(run.exit_code == 0);
  std::filesystem::remove(cfg_path);
}
