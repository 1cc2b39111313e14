#include "plap/parabolic.hpp"

#include "plap/flux.hpp"
#include "plap/integrate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace plap {

namespace {

bool is_lateral_boundary(const GridGeometry& geom, int i, int j, int k) {
  const std::array<int, 3> idx{i, j, k};
  for (int a = 0; a < geom.dim; ++a)
    if (idx[a] == 0 || idx[a] == geom.shape[a] - 1) return true;
  return false;
}

void heat_step(const GridGeometry& geom, const double* u, double dt, double* out) {
  const auto s = geom.strides();
  const double invh2 = 1.0 / (geom.h * geom.h);
  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double lap = 0.0;
    for (int d = 0; d < geom.dim; ++d)
      lap += (u[c + s[d]] - 2.0 * u[c] + u[c - s[d]]) * invh2;
    out[c] = u[c] + dt * lap;
  });
}

void normalized_step(const GridGeometry& geom, const double* u, double p, double eps,
                     double dt, double* out) {
  const auto s = geom.strides();
  const double h = geom.h;
  const double invh2 = 1.0 / (h * h);
  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double g[3] = {0.0, 0.0, 0.0};
    double lap = 0.0, g2 = 0.0;
    for (int d = 0; d < geom.dim; ++d) {
      g[d] = (u[c + s[d]] - u[c - s[d]]) / (2.0 * h);
      g2 += g[d] * g[d];
      lap += (u[c + s[d]] - 2.0 * u[c] + u[c - s[d]]) * invh2;
    }
    double dinf = 0.0;
    for (int a = 0; a < geom.dim; ++a) {
      dinf += (u[c + s[a]] - 2.0 * u[c] + u[c - s[a]]) * invh2 * g[a] * g[a];
      for (int b = a + 1; b < geom.dim; ++b) {
        const double hab = (u[c + s[a] + s[b]] - u[c + s[a] - s[b]] -
                            u[c - s[a] + s[b]] + u[c - s[a] - s[b]]) *
                           0.25 * invh2;
        dinf += 2.0 * hab * g[a] * g[b];
      }
    }
    out[c] = u[c] + dt * (lap + (p - 2.0) * dinf / (g2 + eps));
  });
}

void divergence_step(const GridGeometry& geom, const ScalarField& u, double p,
                     double eps, double dt, double* out) {
  const FaceCoefficients coef = face_coefficients(u, p, eps);
  const ScalarField div = flux_divergence(u, coef);
  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    out[c] = u.values()[c] + dt * div.values()[c];
  });
}

SpaceTimeField run(const ParabolicProblem& problem) {
  const GridGeometry& geom = problem.geometry;
  const double p = problem.params.p;
  const double eps = problem.params.eps;

  const double dt_cap = problem.dt_scale * stable_dt(problem.params, geom.h);
  const int steps =
      static_cast<int>(std::ceil(problem.final_time / dt_cap - 1e-12));
  const double dt = problem.final_time / steps;

  SpaceTimeField out(geom, dt, steps);

  ScalarField current = ScalarField::sample(geom, problem.initial);
  std::copy(current.values().begin(), current.values().end(),
            out.layer(0).begin());

  double bound = current.max_abs_valid();
  ScalarField next(geom);

  for (int step = 0; step < steps; ++step) {
    const double t_next = dt * (step + 1);

    if (p == 2.0)
      heat_step(geom, current.data(), dt, next.data());
    else if (problem.kind == ParabolicKind::Normalized)
      normalized_step(geom, current.data(), p, eps, dt, next.data());
    else
      divergence_step(geom, current, p, eps, dt, next.data());

    double lateral_sup = 0.0;
    for (int i = 0; i < geom.shape[0]; ++i)
      for (int j = 0; j < geom.shape[1]; ++j)
        for (int k = 0; k < geom.shape[2]; ++k)
          if (is_lateral_boundary(geom, i, j, k)) {
            const double g = problem.boundary(geom.point(i, j, k), t_next);
            next.at(i, j, k) = g;
            lateral_sup = std::max(lateral_sup, std::fabs(g));
          }
    bound = std::max(bound, lateral_sup);

    double layer_sup = 0.0;
    for (double v : next.values()) {
      if (!std::isfinite(v))
        throw StabilityError("parabolic solve: non-finite value at layer " +
                                 std::to_string(step + 1),
                             step + 1, v, bound);
      layer_sup = std::max(layer_sup, std::fabs(v));
    }
    if (layer_sup > bound * (1.0 + problem.stability_tol))
      throw StabilityError(
          "parabolic solve: sup-norm escaped the data bound at layer " +
              std::to_string(step + 1),
          step + 1, layer_sup, bound);

    std::copy(next.values().begin(), next.values().end(),
              out.layer(step + 1).begin());
    std::swap(current, next);
  }
  return out;
}

}  // namespace

ParabolicProblem::ParabolicProblem(ProblemParams params_, ParabolicKind kind_,
                                   GridGeometry geometry_, double final_time_,
                                   PointFunction initial_, SpaceTimeFunction boundary_)
    : params(params_),
      kind(kind_),
      geometry(std::move(geometry_)),
      final_time(final_time_),
      initial(std::move(initial_)),
      boundary(std::move(boundary_)) {
  geometry.validate();
  if (params.eps <= 0.0)
    throw std::invalid_argument("ParabolicProblem: eps must be > 0");
  if (final_time <= 0.0)
    throw std::invalid_argument("ParabolicProblem: final_time must be > 0");
  for (int a = 0; a < geometry.dim; ++a)
    if (geometry.shape[a] < 3)
      throw std::invalid_argument("ParabolicProblem: needs >= 3 points per axis");
  if (!initial || !boundary)
    throw std::invalid_argument("ParabolicProblem: missing initial/boundary data");
}

double stable_dt(const ProblemParams& params, double h) {
  if (h <= 0.0) throw std::invalid_argument("stable_dt: h must be positive");
  return h * h /
         (4.0 * (params.n + std::fabs(params.p - 2.0) + std::max(params.p - 2.0, 0.0)));
}

SpaceTimeField solve_normalized(const ParabolicProblem& problem) {
  if (problem.kind != ParabolicKind::Normalized)
    throw std::invalid_argument("solve_normalized: problem kind mismatch");
  if (problem.dt_scale <= 0.0 || problem.dt_scale > 1.0)
    throw std::invalid_argument("solve_normalized: dt_scale must be in (0,1]");
  return run(problem);
}

SpaceTimeField solve_divergence(const ParabolicProblem& problem) {
  if (problem.kind != ParabolicKind::Divergence)
    throw std::invalid_argument("solve_divergence: problem kind mismatch");
  if (problem.dt_scale <= 0.0 || problem.dt_scale > 1.0)
    throw std::invalid_argument("solve_divergence: dt_scale must be in (0,1]");
  return run(problem);
}

double SharpnessSolution::time_slope() const {
  return std::pow(p / (p - 1.0), p - 1.0);
}

double SharpnessSolution::hessian_amplitude() const {
  return p / ((p - 1.0) * (p - 1.0));
}

double SharpnessSolution::operator()(double x1, double t) const {
  return time_slope() * t + std::pow(std::fabs(x1), 1.0 + 1.0 / (p - 1.0));
}

SharpnessSolution exact_sharpness_solution(double p) {
  if (p <= 1.0)
    throw std::invalid_argument("exact_sharpness_solution: p must be > 1");
  return SharpnessSolution{p};
}

std::string step_stats_csv(const SpaceTimeField& u, double p) {
  const GridGeometry& geom = u.geom();
  const auto s = geom.strides();
  const double h = geom.h;
  double cell = 1.0;
  for (int a = 0; a < geom.dim; ++a) cell *= h;

  std::string out = "time,sup_norm,grad_energy\r\n";
  char buf[120];
  for (int layer = 0; layer <= u.steps(); ++layer) {
    double sup = 0.0;
    for (double v : u.layer(layer)) sup = std::max(sup, std::fabs(v));
    KahanSum energy;
    const double* v = u.layer(layer).data();
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      double g2 = 0.0;
      for (int d = 0; d < geom.dim; ++d) {
        const double g = (v[c + s[d]] - v[c - s[d]]) / (2.0 * h);
        g2 += g * g;
      }
      energy.add(std::pow(g2, 0.5 * p));
    });
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\r\n", u.time(layer), sup,
                  energy.value() * cell);
    out += buf;
  }
  return out;
}

}  // namespace plap
