#pragma once

#include "plap/constants.hpp"
#include "plap/elliptic.hpp"
#include "plap/grid.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace plap {

enum class ParabolicKind { Normalized, Divergence };

using SpaceTimeFunction = std::function<double(const std::array<double, 3>&, double)>;

// Initial/lateral-boundary-value problem on geometry x (0, final_time] for
//   normalized:  u_t = Delta u + (p-2) Dinf u / (|Du|^2 + eps)
//   divergence:  u_t = div([|Du|^2+eps]^{(p-2)/2} Du)
// Explicit stepping; dt = final_time/steps with steps chosen so that
// dt <= dt_scale * stable_dt(params, h), dt_scale in (0,1].
struct ParabolicProblem {
  ProblemParams params;
  ParabolicKind kind = ParabolicKind::Normalized;
  GridGeometry geometry;
  double final_time = 0.0;
  PointFunction initial;
  SpaceTimeFunction boundary;
  double dt_scale = 1.0;
  double stability_tol = 1e-9;  // relative slack on the sup-norm bound

  ParabolicProblem(ProblemParams params_, ParabolicKind kind_, GridGeometry geometry_,
                   double final_time_, PointFunction initial_, SpaceTimeFunction boundary_);
};

// Conservative parabolic step bound h^2 / (4 (n + |p-2| + max(p-2, 0))),
// covering the coefficient range [min(1,p-1), max(1,p-1)] of the normalized
// operator; reduces to h^2/8 for the 2D heat equation.
double stable_dt(const ProblemParams& params, double h);

// Thrown when a layer's sup-norm escapes the initial/boundary bound, or on
// non-finite values.
class StabilityError : public std::runtime_error {
 public:
  StabilityError(const std::string& what, int layer, double layer_sup, double bound)
      : std::runtime_error(what), layer(layer), layer_sup(layer_sup), bound(bound) {}

  int layer;
  double layer_sup;
  double bound;
};

// Both solvers dispatch to one shared heat stepper at p = 2, so their p = 2
// runs are bitwise identical.
SpaceTimeField solve_normalized(const ParabolicProblem& problem);
SpaceTimeField solve_divergence(const ParabolicProblem& problem);

// w(x, t) = (p/(p-1))^{p-1} t + |x_1|^{p/(p-1)}: solves the divergence-form
// equation exactly away from {x_1 = 0}. The flux |w_x|^{p-2} w_x equals
// (p/(p-1))^{p-1} x_1, linear in x_1, so its x_1-derivative matches the
// constant w_t everywhere.
struct SharpnessSolution {
  double p;

  double time_slope() const;        // (p/(p-1))^{p-1}
  double hessian_amplitude() const; // p/(p-1)^2; |D^2w| = C |x_1|^{(2-p)/(p-1)}
  double operator()(double x1, double t) const;
  double value(const std::array<double, 3>& x, double t) const {
    return (*this)(x[0], t);
  }
};

SharpnessSolution exact_sharpness_solution(double p);

// Per-step CSV (time, sup_norm, energy = integral of |Du|^p over the valid
// interior).
std::string step_stats_csv(const SpaceTimeField& u, double p);

}  // namespace plap
