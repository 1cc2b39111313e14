#include "cli_config.hpp"
#include "suites.hpp"

#include "plap/constants.hpp"
#include "plap/elliptic.hpp"
#include "plap/field_io.hpp"
#include "plap/jet_sampling.hpp"
#include "plap/parabolic.hpp"
#include "plap/report_io.hpp"
#include "plap/reports.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

int cmd_constants(int n, double p, double gamma, bool has_gamma,
                  const std::string& out_path) {
  nlohmann::json j;
  j["n"] = n;
  j["p"] = p;
  j["gamma_threshold"] = plap::gamma_threshold(n, p);
  const double w22 = plap::w22_exponent_bound(n);
  j["w22_exponent_bound"] = std::isinf(w22) ? nlohmann::json() : nlohmann::json(w22);
  j["parabolic_w22_exponent_bound"] = plap::parabolic_w22_exponent_bound(n);

  if (p < w22) {
    j["k_constant"] = plap::k_constant(n, p);
  } else {
    j["k_constant"] = nullptr;
    j["k_constant_note"] = "requires 1 < p < 3 + 2/(n-2)";
  }
  if (has_gamma) {
    j["gamma"] = gamma;
    j["gamma_admissible"] = gamma < plap::gamma_threshold(n, p);
    if (p != 2.0) j["c_coefficient"] = plap::c_coefficient(n, p, gamma);
  }
  const plap::CordesMargin ce = plap::cordes_margin_elliptic(n, p);
  j["cordes_elliptic"] = {{"delta", ce.delta}, {"admissible", ce.admissible}};
  const plap::CordesMargin cp = plap::cordes_margin_parabolic(n, p);
  j["cordes_parabolic"] = {{"delta", cp.delta}, {"admissible", cp.admissible}};

  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) write_text(out_path, text + "\n");
  return kExitPass;
}

int cmd_check_inequality(std::vector<int> dims, std::int64_t samples,
                         std::uint64_t seed, double range,
                         const std::string& out_path) {
  if (dims.empty()) dims = {2, 3, 4, 5, 6};
  nlohmann::json results = nlohmann::json::array();
  bool all_pass = true;
  for (int n : dims) {
    const plap::InequalityCheck check =
        plap::check_fundamental_inequality(n, samples, seed, range);
    const bool inequality_ok = check.max_violation <= 1e-9;
    const bool planar_ok = n != 2 || check.max_planar_residual <= 1e-12;
    const bool rhs_ok = check.min_rhs >= -1e-12;
    const bool pass = inequality_ok && planar_ok && rhs_ok;
    all_pass = all_pass && pass;
    nlohmann::json row;
    row["n"] = n;
    row["samples"] = check.samples;
    row["max_normalized_violation"] = check.max_violation;
    row["min_normalized_rhs"] = check.min_rhs;
    if (n == 2) row["max_planar_identity_residual"] = check.max_planar_residual;
    row["pass"] = pass;
    results.push_back(std::move(row));
  }
  nlohmann::json j;
  j["seed"] = seed;
  j["entry_range"] = range;
  j["all_pass"] = all_pass;
  j["results"] = std::move(results);
  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) write_text(out_path, text + "\n");
  return all_pass ? kExitPass : kExitFail;
}

int cmd_solve_elliptic(const std::string& config_path) {
  const plap::cli::EllipticConfig cfg =
      plap::cli::EllipticConfig::parse(plap::cli::load_config_file(config_path));
  const plap::EllipticProblem problem = cfg.to_problem();
  try {
    const plap::EllipticSolution sol = plap::solve(problem);
    plap::write_field(cfg.output_field, sol.u);
    write_text(cfg.output_log, plap::convergence_csv(sol.log));
    std::cout << "converged in " << sol.log.iterates.back().iteration
              << " iterations; final residual "
              << plap::format_double(sol.log.iterates.back().residual_max) << "\n"
              << "field: " << cfg.output_field << "\nlog: " << cfg.output_log << "\n";
    return kExitPass;
  } catch (const plap::SolveError& e) {
    write_text(cfg.output_log, plap::convergence_csv(e.log));
    std::cerr << "solve failed: " << e.what() << " (residual history in "
              << cfg.output_log << ")\n";
    return kExitFail;
  }
}

int cmd_solve_parabolic(const std::string& config_path) {
  const plap::cli::ParabolicConfig cfg =
      plap::cli::ParabolicConfig::parse(plap::cli::load_config_file(config_path));
  const plap::ParabolicProblem problem = cfg.to_problem();
  const plap::SpaceTimeField u = cfg.kind == plap::ParabolicKind::Normalized
                                     ? plap::solve_normalized(problem)
                                     : plap::solve_divergence(problem);
  plap::write_field(cfg.output_field, u);
  write_text(cfg.output_steps, plap::step_stats_csv(u, cfg.p));
  std::cout << "stepped to t = " << plap::format_double(u.time(u.steps())) << " in "
            << u.steps() << " steps (dt = " << plap::format_double(u.dt()) << ")\n"
            << "field: " << cfg.output_field << "\nsteps: " << cfg.output_steps
            << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& suite, const std::string& config_path,
               const std::string& csv_path, const std::string& json_path) {
  nlohmann::json config = nlohmann::json::object();
  if (!config_path.empty()) config = plap::cli::load_config_file(config_path);
  const plap::cli::SuiteResult result = plap::cli::run_suite(suite, config);

  const std::string summary =
      plap::suite_summary_json(result.suite, result.reports, result.all_pass);
  write_text(csv_path, plap::reports_csv(result.reports));
  write_text(json_path, summary + "\n");
  for (const plap::EstimateReport& r : result.reports)
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (h = "
              << plap::format_double(r.h) << ", ratio = "
              << plap::format_double(r.ratio) << ")\n";
  std::cout << (result.all_pass ? "suite passed" : "suite FAILED") << "; " << csv_path
            << ", " << json_path << "\n";
  return result.all_pass ? kExitPass : kExitFail;
}

int cmd_sharpness(double p, int levels, double h0, const std::string& out_path) {
  const plap::SharpnessScan scan =
      plap::sharpness_scan(p, plap::dyadic_spacings(h0, levels));
  std::cout << "h,hessian_energy\n";
  for (const auto& level : scan.levels)
    std::cout << plap::format_double(level.h) << ","
              << plap::format_double(level.value) << "\n";
  std::cout << "classification: " << scan.classification << "\n";
  if (scan.classification == "log-divergent")
    std::cout << "fitted log coefficient: "
              << plap::format_double(scan.fitted_log_coefficient) << "\n";
  if (scan.classification == "divergent")
    std::cout << "fitted rate exponent: " << plap::format_double(scan.fitted_rate)
              << "\n";
  if (!out_path.empty()) write_text(out_path, plap::sharpness_csv(scan));
  return kExitPass;
}

int cmd_sign_probe(const std::vector<std::vector<double>>& raw_points, double h,
                   const std::string& out_path) {
  std::vector<std::array<double, 3>> points;
  for (const auto& v : raw_points) {
    if (v.size() != 3)
      throw plap::cli::ConfigError({"point: needs exactly 3 coordinates"});
    points.push_back({v[0], v[1], v[2]});
  }
  if (points.empty()) points = {{1.0, 1.0, 1.0}, {1000.0, 1.0, 1.0}};

  const auto results = plap::sign_change_probe(points, h);
  bool all_pass = true;
  std::string csv = "x1,x2,x3,analytic,discrete,agree\r\n";
  for (const auto& r : results) {
    const double tol = 1e3 * h * h * std::max(1.0, std::fabs(r.analytic));
    const bool agree = std::fabs(r.discrete - r.analytic) <= tol;
    all_pass = all_pass && agree;
    for (int a = 0; a < 3; ++a) csv += plap::format_double(r.x[a]) + ",";
    csv += plap::format_double(r.analytic) + "," + plap::format_double(r.discrete) +
           "," + (agree ? "true" : "false") + "\r\n";
    std::cout << "(" << r.x[0] << ", " << r.x[1] << ", " << r.x[2]
              << "): analytic " << plap::format_double(r.analytic) << ", discrete "
              << plap::format_double(r.discrete) << (agree ? "" : "  [DISAGREE]")
              << "\n";
  }
  if (!out_path.empty()) write_text(out_path, csv);
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "plap: numerical workbench for second-order Sobolev bounds of "
      "p-Laplace-type equations"};
  app.require_subcommand(1);

  // constants
  int n = 2;
  double p = 2.0, gamma = 0.0;
  std::string out_path;
  CLI::App* constants = app.add_subcommand(
      "constants", "Evaluate the closed-form constants and admissibility margins");
  constants->add_option("--n", n, "spatial dimension (>= 2)")->required();
  constants->add_option("--p", p, "exponent p (> 1)")->required();
  CLI::Option* gamma_opt =
      constants->add_option("--gamma", gamma, "weight exponent gamma");
  constants->add_option("--out", out_path, "write the JSON to this path");

  // check-inequality
  std::vector<int> dims;
  std::int64_t samples = 1000000;
  std::uint64_t seed = plap::kDefaultJetSeed;
  double range = 10.0;
  std::string check_out;
  CLI::App* check = app.add_subcommand(
      "check-inequality",
      "Randomized check of the pointwise Hessian-gradient inequality");
  check->add_option("--n", dims, "dimensions to sample (default 2..6)");
  check->add_option("--samples", samples, "jets per dimension")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "RNG seed (fixed default for reproducibility)");
  check->add_option("--range", range, "entry range [-range, range)")
      ->check(CLI::PositiveNumber);
  check->add_option("--out", check_out, "write the JSON summary to this path");

  // solve-elliptic / solve-parabolic
  std::string elliptic_config, parabolic_config;
  CLI::App* se = app.add_subcommand("solve-elliptic",
                                    "Solve the regularized p-Laplace Dirichlet "
                                    "problem from a JSON config");
  se->add_option("--config", elliptic_config, "JSON config path")->required();
  CLI::App* sp = app.add_subcommand(
      "solve-parabolic",
      "Step the regularized parabolic equations from a JSON config");
  sp->add_option("--config", parabolic_config, "JSON config path")->required();

  // verify
  std::string suite, verify_config;
  std::string verify_csv = "verify_reports.csv";
  std::string verify_json = "verify_summary.json";
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and emit a CSV row per estimate report");
  verify->add_option("--suite", suite, "identity | elliptic | parabolic | all")
      ->required();
  verify->add_option("--config", verify_config, "optional JSON overrides");
  verify->add_option("--csv", verify_csv, "report CSV output path");
  verify->add_option("--json", verify_json, "JSON summary output path");

  // sharpness
  double sharp_p = 3.0, h0 = 1.0 / 16.0;
  int levels = 5;
  std::string sharp_out;
  CLI::App* sharp = app.add_subcommand(
      "sharpness",
      "Hessian-energy growth of the exact cusp solution under refinement");
  sharp->add_option("--p", sharp_p, "exponent p (> 1)")->required();
  sharp->add_option("--levels", levels, "number of dyadic levels")
      ->check(CLI::Range(3, 12));
  sharp->add_option("--h0", h0, "coarsest spacing (must divide 0.5)");
  sharp->add_option("--out", sharp_out, "write the scan CSV to this path");

  // sign-probe
  std::vector<std::vector<double>> probe_points;
  double probe_h = 1e-2;
  std::string probe_out;
  CLI::App* probe = app.add_subcommand(
      "sign-probe",
      "Evaluate the sign-changing Hessian gap of the explicit cusp example");
  probe->add_option("--point", probe_points,
                    "probe point x1 x2 x3 (repeatable; all coordinates > 0)")
      ->expected(3);
  probe->add_option("--spacing", probe_h, "probe spacing for the discrete cross-check")
      ->check(CLI::PositiveNumber);
  probe->add_option("--out", probe_out, "write the probe CSV to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (constants->parsed())
      return cmd_constants(n, p, gamma, gamma_opt->count() > 0, out_path);
    if (check->parsed())
      return cmd_check_inequality(dims, samples, seed, range, check_out);
    if (se->parsed()) return cmd_solve_elliptic(elliptic_config);
    if (sp->parsed()) return cmd_solve_parabolic(parabolic_config);
    if (verify->parsed())
      return cmd_verify(suite, verify_config, verify_csv, verify_json);
    if (sharp->parsed()) return cmd_sharpness(sharp_p, levels, h0, sharp_out);
    if (probe->parsed()) return cmd_sign_probe(probe_points, probe_h, probe_out);
  } catch (const plap::cli::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "parameter range violation: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
