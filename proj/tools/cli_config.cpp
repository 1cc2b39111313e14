#include "cli_config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace plap::cli {

namespace {

// Collects every violation before rejecting the config.
struct Check {
  std::vector<std::string> violations;

  void fail(const std::string& key, const std::string& why) {
    violations.push_back(key + ": " + why);
  }
  bool has(const nlohmann::json& j, const std::string& key) { return j.contains(key); }

  template <class T>
  T get(const nlohmann::json& j, const std::string& key, T fallback,
        const std::string& range, bool (*ok)(const T&)) {
    if (!j.contains(key)) {
      if (!ok(fallback)) fail(key, "missing; " + range);
      return fallback;
    }
    try {
      T v = j.at(key).get<T>();
      if (!ok(v)) fail(key, range);
      return v;
    } catch (const nlohmann::json::exception&) {
      fail(key, "wrong type; " + range);
      return fallback;
    }
  }

  void finish() {
    if (!violations.empty()) throw ConfigError(std::move(violations));
  }
};

bool any_int(const int&) { return true; }
bool any_double(const double&) { return true; }
bool positive(const double& v) { return v > 0.0; }
bool nonneg(const double& v) { return v >= 0.0; }
bool unit_interval(const double& v) { return v > 0.0 && v <= 1.0; }
bool dim_ok(const int& v) { return v >= 1 && v <= 3; }
bool p_ok(const double& v) { return v > 1.0; }
bool iters_ok(const int& v) { return v >= 1; }
bool nonempty(const std::string& v) { return !v.empty(); }

void parse_schema(Check& c, const nlohmann::json& j) {
  const int schema = c.get<int>(j, "schema", 0, "must be the literal 1", any_int);
  if (schema != 1) c.fail("schema", "unsupported version (expected 1)");
}

GridConfig parse_grid(Check& c, const nlohmann::json& j) {
  GridConfig g;
  g.n = c.get<int>(j, "n", 0, "spatial dimension must be 1, 2, or 3", dim_ok);
  g.h = c.get<double>(j, "h", 0.0, "grid spacing must be > 0", positive);
  if (c.has(j, "shape")) {
    try {
      g.shape = j.at("shape").get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      c.fail("shape", "must be an array of per-axis point counts");
    }
  }
  if (g.n >= 1 && static_cast<int>(g.shape.size()) != g.n)
    c.fail("shape", "needs exactly n entries");
  for (int s : g.shape)
    if (s < 3) c.fail("shape", "each axis needs >= 3 points");
  if (c.has(j, "origin")) {
    try {
      g.origin = j.at("origin").get<std::vector<double>>();
    } catch (const nlohmann::json::exception&) {
      c.fail("origin", "must be an array of coordinates");
    }
    if (static_cast<int>(g.origin.size()) != g.n)
      c.fail("origin", "needs exactly n entries");
  }
  return g;
}

Preset parse_preset(Check& c, const nlohmann::json& j, const std::string& key) {
  static const std::set<std::string> kinds{
      "zero", "constant", "affine", "saddle", "sine_mode", "radial", "sharpness"};
  Preset p;
  if (!c.has(j, key)) {
    c.fail(key, "missing data preset");
    return p;
  }
  const nlohmann::json& pj = j.at(key);
  if (!pj.is_object() || !pj.contains("preset")) {
    c.fail(key + ".preset", "must name one of zero/constant/affine/saddle/"
                            "sine_mode/radial/sharpness");
    return p;
  }
  p.kind = pj.at("preset").get<std::string>();
  if (kinds.find(p.kind) == kinds.end())
    c.fail(key + ".preset", "unknown preset '" + p.kind + "'");
  if (pj.contains("value")) p.value = pj.at("value").get<double>();
  if (pj.contains("coeffs")) p.coeffs = pj.at("coeffs").get<std::vector<double>>();
  if (pj.contains("center")) p.center = pj.at("center").get<std::vector<double>>();
  if (p.kind == "radial" && p.center.empty())
    c.fail(key + ".center", "radial preset needs a center");
  if (p.kind == "affine" && p.coeffs.empty())
    c.fail(key + ".coeffs", "affine preset needs coefficients (a..., b)");
  return p;
}

std::array<double, 3> to_array3(const std::vector<double>& v) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) out[i] = v[i];
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations_)
    : std::runtime_error([&violations_] {
        std::ostringstream os;
        os << "invalid config (" << violations_.size() << " violation"
           << (violations_.size() == 1 ? "" : "s") << "):";
        for (const std::string& v : violations_) os << "\n  - " << v;
        return os.str();
      }()),
      violations(std::move(violations_)) {}

GridGeometry GridConfig::to_geometry() const {
  GridGeometry g;
  g.dim = n;
  g.h = h;
  for (int a = 0; a < 3; ++a) {
    g.shape[a] = a < n ? shape[a] : 1;
    g.origin[a] = a < static_cast<int>(origin.size()) ? origin[a] : 0.0;
  }
  g.validate();
  return g;
}

EllipticConfig EllipticConfig::parse(const nlohmann::json& j) {
  Check c;
  parse_schema(c, j);
  EllipticConfig cfg;
  cfg.grid = parse_grid(c, j);
  cfg.p = c.get<double>(j, "p", 0.0, "exponent requires p > 1", p_ok);
  cfg.eps = c.get<double>(j, "eps", 0.0,
                          "regularization requires eps > 0 (the solver addresses "
                          "the regularized equation only)",
                          positive);
  cfg.boundary = parse_preset(c, j, "boundary");
  cfg.damping = c.get<double>(j, "damping", 0.5, "must lie in (0,1]", unit_interval);
  cfg.picard_tol = c.get<double>(j, "picard_tol", 1e-8, "must be > 0", positive);
  cfg.max_iterations =
      c.get<int>(j, "max_iterations", 500, "must be >= 1", iters_ok);
  cfg.linear_tol = c.get<double>(j, "linear_tol", 1e-10, "must be > 0", positive);
  cfg.residual_tol = c.get<double>(j, "residual_tol", 1e-6, "must be > 0", positive);
  cfg.output_field = c.get<std::string>(j, "output_field", cfg.output_field,
                                        "must be a path", nonempty);
  cfg.output_log =
      c.get<std::string>(j, "output_log", cfg.output_log, "must be a path", nonempty);
  c.finish();
  return cfg;
}

EllipticProblem EllipticConfig::to_problem() const {
  EllipticProblem problem(ProblemParams(grid.n, p, eps), grid.to_geometry(),
                          make_point_function(boundary, grid.n, p));
  problem.damping = damping;
  problem.picard_tol = picard_tol;
  problem.max_iterations = max_iterations;
  problem.linear_tol = linear_tol;
  problem.residual_tol = residual_tol;
  return problem;
}

ParabolicConfig ParabolicConfig::parse(const nlohmann::json& j) {
  Check c;
  parse_schema(c, j);
  ParabolicConfig cfg;
  cfg.grid = parse_grid(c, j);
  cfg.p = c.get<double>(j, "p", 0.0, "exponent requires p > 1", p_ok);
  cfg.eps = c.get<double>(j, "eps", 0.0, "regularization requires eps > 0", positive);
  const std::string kind = c.get<std::string>(
      j, "kind", std::string(), "must be 'normalized' or 'divergence'", nonempty);
  if (kind == "normalized")
    cfg.kind = ParabolicKind::Normalized;
  else if (kind == "divergence")
    cfg.kind = ParabolicKind::Divergence;
  else
    c.fail("kind", "must be 'normalized' or 'divergence'");
  cfg.final_time =
      c.get<double>(j, "final_time", 0.0, "must be > 0", positive);
  cfg.initial = parse_preset(c, j, "initial");
  cfg.boundary = parse_preset(c, j, "boundary");
  cfg.dt_scale = c.get<double>(j, "dt_scale", 1.0,
                               "must lie in (0,1]: dt may not exceed the "
                               "conservative parabolic step bound",
                               unit_interval);
  cfg.output_field = c.get<std::string>(j, "output_field", cfg.output_field,
                                        "must be a path", nonempty);
  cfg.output_steps = c.get<std::string>(j, "output_steps", cfg.output_steps,
                                        "must be a path", nonempty);
  c.finish();
  return cfg;
}

ParabolicProblem ParabolicConfig::to_problem() const {
  ParabolicProblem problem(ProblemParams(grid.n, p, eps), kind, grid.to_geometry(),
                           final_time, make_point_function(initial, grid.n, p),
                           make_spacetime_function(boundary, grid.n, p));
  problem.dt_scale = dt_scale;
  return problem;
}

nlohmann::json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"config file: cannot open " + path});
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError({std::string("config file: JSON parse error: ") + e.what()});
  }
}

PointFunction make_point_function(const Preset& preset, int n, double p) {
  if (preset.kind == "zero")
    return [](const std::array<double, 3>&) { return 0.0; };
  if (preset.kind == "constant") {
    const double v = preset.value;
    return [v](const std::array<double, 3>&) { return v; };
  }
  if (preset.kind == "affine") {
    const std::vector<double> c = preset.coeffs;
    return [c, n](const std::array<double, 3>& x) {
      double v = c.size() > static_cast<std::size_t>(n) ? c[n] : 0.0;
      for (int a = 0; a < n && a < static_cast<int>(c.size()); ++a) v += c[a] * x[a];
      return v;
    };
  }
  if (preset.kind == "saddle")
    return [](const std::array<double, 3>& x) { return x[0] * x[0] - x[1] * x[1]; };
  if (preset.kind == "sine_mode")
    return [n](const std::array<double, 3>& x) {
      double v = 1.0;
      for (int a = 0; a < n; ++a) v *= std::sin(std::numbers::pi * x[a]);
      return v;
    };
  if (preset.kind == "radial")
    return radial_reference(n, p, to_array3(preset.center));
  if (preset.kind == "sharpness") {
    const SharpnessSolution w = exact_sharpness_solution(p);
    return [w](const std::array<double, 3>& x) { return w.value(x, 0.0); };
  }
  throw ConfigError({"preset: unknown kind '" + preset.kind + "'"});
}

SpaceTimeFunction make_spacetime_function(const Preset& preset, int n, double p) {
  if (preset.kind == "sharpness") {
    const SharpnessSolution w = exact_sharpness_solution(p);
    return [w](const std::array<double, 3>& x, double t) { return w.value(x, t); };
  }
  const PointFunction f = make_point_function(preset, n, p);
  return [f](const std::array<double, 3>& x, double) { return f(x); };
}

}  // namespace plap::cli
