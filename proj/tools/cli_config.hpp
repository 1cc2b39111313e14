#pragma once

#include "plap/elliptic.hpp"
#include "plap/parabolic.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace plap::cli {

// Invalid configs are rejected before any compute; `violations` lists every
// offending key with the violated range.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> violations_);
  std::vector<std::string> violations;
};

// Data presets shared by the solve subcommands. `kind` is one of:
//   zero | constant | affine | saddle | sine_mode | radial | sharpness
struct Preset {
  std::string kind = "zero";
  double value = 0.0;                      // constant
  std::vector<double> coeffs;              // affine: a . x + b, b last
  std::vector<double> center;              // radial
};

struct GridConfig {
  int n = 2;
  std::vector<int> shape;
  double h = 0.0;
  std::vector<double> origin;  // defaults to zeros

  GridGeometry to_geometry() const;
};

struct EllipticConfig {
  GridConfig grid;
  double p = 0.0;
  double eps = 0.0;
  Preset boundary;
  double damping = 0.5;
  double picard_tol = 1e-8;
  int max_iterations = 500;
  double linear_tol = 1e-10;
  double residual_tol = 1e-6;
  std::string output_field = "elliptic_field.plap";
  std::string output_log = "elliptic_convergence.csv";

  static EllipticConfig parse(const nlohmann::json& j);
  EllipticProblem to_problem() const;
};

struct ParabolicConfig {
  GridConfig grid;
  double p = 0.0;
  double eps = 0.0;
  ParabolicKind kind = ParabolicKind::Normalized;
  double final_time = 0.0;
  Preset initial;
  Preset boundary;
  double dt_scale = 1.0;
  std::string output_field = "parabolic_field.plap";
  std::string output_steps = "parabolic_steps.csv";

  static ParabolicConfig parse(const nlohmann::json& j);
  ParabolicProblem to_problem() const;
};

nlohmann::json load_config_file(const std::string& path);

PointFunction make_point_function(const Preset& preset, int n, double p);
SpaceTimeFunction make_spacetime_function(const Preset& preset, int n, double p);

}  // namespace plap::cli
