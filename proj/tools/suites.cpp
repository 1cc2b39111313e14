#include "suites.hpp"

#include "cli_config.hpp"

#include "plap/cutoff.hpp"
#include "plap/elliptic.hpp"
#include "plap/field_io.hpp"
#include "plap/parabolic.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace plap::cli {

namespace {

std::vector<int> levels_from(const nlohmann::json& config, const char* key,
                             std::vector<int> fallback) {
  if (!config.contains(key)) return fallback;
  const auto levels = config.at(key).get<std::vector<int>>();
  if (levels.size() < 2) throw ConfigError({std::string(key) + ": needs >= 2 levels"});
  for (int cells : levels)
    if (cells < 8) throw ConfigError({std::string(key) + ": each level needs >= 8 cells"});
  return levels;
}

PointFunction seeded_quartic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::array<double, 15> c{};
  for (double& v : c) v = unif(rng);
  return [c](const std::array<double, 3>& x) {
    double val = 0.0;
    int idx = 0;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b)
        val += c[idx++] * std::pow(x[0], a) * std::pow(x[1], b);
    return val;
  };
}

ScalarField radial_benchmark(int cells, int n, double p) {
  const GridGeometry geom = GridGeometry::unit_square(cells, n);
  const std::array<double, 3> center{-0.5, -0.5, n == 3 ? -0.5 : 0.0};
  return ScalarField::sample(geom, radial_reference(n, p, center));
}

EstimateReport study_summary(const std::string& name, const RefinementStudy& study) {
  EstimateReport r = study.levels.back();
  r.name = name;
  r.lhs = study.levels.back().ratio;
  r.rhs_raw = study.cap * study.levels.front().ratio;
  r.ratio = r.rhs_raw > 0.0 ? r.lhs / r.rhs_raw
                            : std::numeric_limits<double>::quiet_NaN();
  r.tolerance = study.cap;
  r.pass = study.pass;
  r.notes = "finest ratio vs cap x coarsest ratio over " +
            std::to_string(study.levels.size()) + " dyadic levels";
  return r;
}

}  // namespace

SuiteResult run_identity_suite(const nlohmann::json& config) {
  const std::vector<int> levels = levels_from(config, "levels", {32, 64, 128});
  const std::uint64_t seed = config.value("seed", 7ull);
  const double band_lo = config.value("ratio_band_lo", 3.2);
  const double band_hi = config.value("ratio_band_hi", 4.8);

  const PointFunction quartic = seeded_quartic(seed);
  SuiteResult result;
  result.suite = "identity";

  std::vector<double> errors;
  for (int cells : levels) {
    const GridGeometry geom = GridGeometry::unit_square(cells);
    const ScalarField f = ScalarField::sample(geom, quartic);
    const ScalarField phi = bump_cutoff(geom, Region::ball({0.5, 0.5, 0.0}, 0.15));
    EstimateReport r = divergence_identity_report(f, phi, 1.0);
    const double denom = std::max(std::fabs(r.lhs), std::fabs(r.rhs_raw));
    errors.push_back(std::fabs(r.lhs - r.rhs_raw) / denom);
    result.reports.push_back(std::move(r));
  }

  bool rates_ok = true;
  std::string rates;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    const double q = errors[i] / errors[i + 1];
    rates += (i ? ", " : "") + format_double(q);
    if (q < band_lo || q > band_hi) rates_ok = false;
  }
  EstimateReport rate;
  rate.name = "divergence-identity-rate";
  rate.statement = "identity error contracts like h^2 under dyadic refinement";
  rate.n = 2;
  rate.h = 1.0 / levels.back();
  rate.lhs = errors.back();
  rate.rhs_raw = errors.front();
  rate.ratio = errors.front() / errors.back();
  rate.pass = rates_ok;
  rate.tolerance = band_hi;
  rate.notes = "consecutive error ratios: " + rates + " (band [" +
               format_double(band_lo) + ", " + format_double(band_hi) + "])";
  result.reports.push_back(std::move(rate));

  result.all_pass = rates_ok;
  return result;
}

SuiteResult run_elliptic_suite(const nlohmann::json& config) {
  SuiteResult result;
  result.suite = "elliptic";
  result.all_pass = true;

  struct Case {
    int n;
    double p;
    int cells;
  };
  std::vector<Case> cases{{2, 1.5, 64}, {2, 3.0, 64}, {2, 4.0, 64},
                          {3, 1.5, 64}, {3, 3.0, 64}};
  if (config.contains("cases")) {
    cases.clear();
    for (const auto& cj : config.at("cases"))
      cases.push_back({cj.at("n").get<int>(), cj.at("p").get<double>(),
                       cj.value("cells", 64)});
  }

  for (const Case& cs : cases) {
    const ScalarField u = radial_benchmark(cs.cells, cs.n, cs.p);
    const std::array<double, 3> center{0.5, 0.5, cs.n == 3 ? 0.5 : 0.0};
    const Region ball = Region::ball(center, 0.2);
    const ProblemParams params(cs.n, cs.p, 0.0);

    EstimateReport sign = hessian_sign_bound_report(u, params, ball);
    result.all_pass = result.all_pass && sign.pass;
    result.reports.push_back(std::move(sign));

    if (cs.n == 2) {
      EstimateReport quasi = quasiregularity_report(u, params, ball);
      result.all_pass = result.all_pass && quasi.pass;
      result.reports.push_back(std::move(quasi));
    }
  }

  const std::vector<int> levels = levels_from(config, "levels", {32, 64, 128});
  std::vector<double> spacings;
  for (int cells : levels) spacings.push_back(1.0 / cells);
  const double cap = config.value("ratio_cap", 2.0);

  for (const double p : {3.0, 4.0}) {
    const ProblemParams params(2, p, 1e-6);
    for (const double gamma : {0.0, gamma_threshold(2, p) - 0.1}) {
      const RefinementStudy power = ratio_boundedness_study(
          [&](double h) {
            const int cells = static_cast<int>(std::lround(1.0 / h));
            return power_gradient_energy_report(radial_benchmark(cells, 2, p), params,
                                                gamma,
                                                Region::ball({0.5, 0.5, 0.0}, 0.15));
          },
          spacings, cap);
      result.all_pass = result.all_pass && power.pass;
      result.reports.push_back(study_summary("power-gradient-energy-study", power));

      const RefinementStudy weighted = ratio_boundedness_study(
          [&](double h) {
            const int cells = static_cast<int>(std::lround(1.0 / h));
            const GridGeometry geom = GridGeometry::unit_square(cells);
            const ScalarField u = radial_benchmark(cells, 2, p);
            const ScalarField phi =
                bump_cutoff(geom, Region::ball({0.5, 0.5, 0.0}, 0.15));
            return weighted_energy_report(u, params, gamma, phi);
          },
          spacings, cap);
      result.all_pass = result.all_pass && weighted.pass;
      result.reports.push_back(study_summary("weighted-energy-study", weighted));
    }
  }
  return result;
}

SuiteResult run_parabolic_suite(const nlohmann::json& config) {
  SuiteResult result;
  result.suite = "parabolic";
  result.all_pass = true;

  const std::vector<int> levels = levels_from(config, "levels", {16, 32, 64});
  const double cap = config.value("ratio_cap", 2.0);

  auto heat_report = [&](int cells) {
    const GridGeometry geom = GridGeometry::unit_square(cells);
    const ParabolicProblem problem(
        ProblemParams(2, 2.0, 1e-4), ParabolicKind::Normalized, geom, 0.1,
        [](const std::array<double, 3>& x) {
          return std::sin(std::numbers::pi * x[0]) * std::sin(std::numbers::pi * x[1]);
        },
        [](const std::array<double, 3>&, double) { return 0.0; });
    const SpaceTimeField u = solve_normalized(problem);
    return parabolic_energy_report(u, ProblemParams(2, 2.0, 1e-4),
                                   ParabolicEstimate::SecondOrderNormalized,
                                   Region::cylinder({0.5, 0.5, 0.0}, 0.145, 0.095));
  };
  std::vector<double> spacings;
  for (int cells : levels) spacings.push_back(1.0 / cells);
  const RefinementStudy heat = ratio_boundedness_study(
      [&](double h) { return heat_report(static_cast<int>(std::lround(1.0 / h))); },
      spacings, cap);
  result.all_pass = result.all_pass && heat.pass;
  for (const EstimateReport& r : heat.levels) result.reports.push_back(r);
  result.reports.push_back(study_summary("parabolic-normalized-study", heat));

  // Divergence-form estimates on the exact cusp solution, sampled away from
  // the line x1 = 0.
  const double p = config.value("divergence_p", 2.5);
  const SharpnessSolution w = exact_sharpness_solution(p);
  GridGeometry geom;
  geom.dim = 2;
  geom.h = 1.0 / 32.0;
  geom.shape = {33, 33, 1};
  geom.origin = {0.25, -0.5, 0.0};
  const double T = 0.05;
  const int steps = 500;
  SpaceTimeField u(geom, T / steps, steps);
  for (int layer = 0; layer <= steps; ++layer)
    for (int i = 0; i < geom.shape[0]; ++i)
      for (int j = 0; j < geom.shape[1]; ++j)
        u.at(layer, i, j) = w.value(geom.point(i, j, 0), u.time(layer));
  const Region q = Region::cylinder({0.75, 0.0, 0.0}, 0.1, 0.045);
  const ProblemParams params(2, p, 1e-6);
  for (const ParabolicEstimate est :
       {ParabolicEstimate::TimeDerivative, ParabolicEstimate::SecondOrderDivergence}) {
    EstimateReport r = parabolic_energy_report(u, params, est, q);
    result.all_pass = result.all_pass && r.pass;
    result.reports.push_back(std::move(r));
  }
  return result;
}

SuiteResult run_suite(const std::string& name, const nlohmann::json& config) {
  if (name == "identity") return run_identity_suite(config);
  if (name == "elliptic") return run_elliptic_suite(config);
  if (name == "parabolic") return run_parabolic_suite(config);
  if (name == "all") {
    SuiteResult all;
    all.suite = "all";
    all.all_pass = true;
    for (const std::string& sub : {"identity", "elliptic", "parabolic"}) {
      SuiteResult r = run_suite(sub, config);
      all.all_pass = all.all_pass && r.all_pass;
      for (EstimateReport& rep : r.reports) all.reports.push_back(std::move(rep));
    }
    return all;
  }
  throw ConfigError({"suite: unknown suite '" + name + "' (identity, elliptic, "
                     "parabolic, all)"});
}

std::vector<std::string> suite_names() {
  return {"identity", "elliptic", "parabolic", "all"};
}

}  // namespace plap::cli
