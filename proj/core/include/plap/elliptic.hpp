#pragma once

#include "plap/constants.hpp"
#include "plap/grid.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace plap {

// Dirichlet problem for div([|Du|^2+eps]^{(p-2)/2} Du) = 0 on a box.
// eps must be strictly positive: the solver addresses the regularized
// equation only.
struct EllipticProblem {
  ProblemParams params;
  GridGeometry geometry;
  PointFunction boundary;

  double damping = 0.5;         // Picard relaxation theta in (0,1]
  double picard_tol = 1e-8;     // on the relative sup-norm update
  int max_iterations = 500;
  double linear_tol = 1e-10;    // PCG relative residual
  double residual_tol = 1e-6;   // normalized conservative residual at exit

  EllipticProblem(ProblemParams params_, GridGeometry geometry_, PointFunction boundary_);
};

struct PicardIterate {
  int iteration = 0;
  double rel_update = 0.0;
  double residual_max = 0.0;  // max interior |flux divergence|
};

struct ConvergenceLog {
  std::vector<PicardIterate> iterates;
  bool converged = false;
  int linear_iterations_total = 0;
};

struct EllipticSolution {
  ScalarField u;
  ConvergenceLog log;
};

// Thrown on non-convergence (carries the residual history) and on NaN
// detection (carries the offending iterate index).
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, ConvergenceLog log, int nan_iteration = -1)
      : std::runtime_error(what), log(std::move(log)), nan_iteration(nan_iteration) {}

  ConvergenceLog log;
  int nan_iteration;
};

// Damped Picard outer iteration (freeze the face coefficients, solve the
// linear conservative problem by Jacobi-preconditioned CG, relax), with the
// p = 2 solution of the same boundary data as initial guess. p = 2 itself is
// a single linear solve.
EllipticSolution solve(const EllipticProblem& problem);

// Classical radial family: |x - center|^{(p-n)/(p-1)} for p != n, and
// log|x - center| for p = n; zeros of the p-Laplacian away from the center.
PointFunction radial_reference(int n, double p, std::array<double, 3> center);

// Nondivergence residual Delta u + (p-2) Dinf u / (|Du|^2 + eps) from the
// central-difference derivatives; an independent check on the conservative
// residual. Output margin = input margin + 1.
ScalarField nondivergence_residual(const ScalarField& u, const ProblemParams& params);

// Convergence CSV (iteration, rel_update, residual_max).
std::string convergence_csv(const ConvergenceLog& log);

}  // namespace plap
