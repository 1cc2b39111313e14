#include "plap/elliptic.hpp"

#include "plap/flux.hpp"
#include "plap/stencils.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace plap {

namespace {

// Matrix-free operator A x = -div(k grad x) on interior points, with x = 0
// on the boundary ring. Symmetric positive definite for positive k.
struct LinearOperator {
  const GridGeometry& geom;
  const FaceCoefficients& coef;

  void apply(const std::vector<double>& x, std::vector<double>& out) const {
    const auto s = geom.strides();
    const double invh2 = 1.0 / (geom.h * geom.h);
    std::fill(out.begin(), out.end(), 0.0);
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      double acc = 0.0;
      for (int d = 0; d < geom.dim; ++d) {
        const double kp = coef.k[d][static_cast<std::size_t>(c)];
        const double km = coef.k[d][static_cast<std::size_t>(c - s[d])];
        acc += kp * (x[c] - x[c + s[d]]) + km * (x[c] - x[c - s[d]]);
      }
      out[c] = acc * invh2;
    });
  }

  std::vector<double> diagonal() const {
    const auto s = geom.strides();
    const double invh2 = 1.0 / (geom.h * geom.h);
    std::vector<double> diag(static_cast<std::size_t>(geom.num_points()), 1.0);
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      double acc = 0.0;
      for (int d = 0; d < geom.dim; ++d)
        acc += coef.k[d][static_cast<std::size_t>(c)] +
               coef.k[d][static_cast<std::size_t>(c - s[d])];
      diag[c] = acc * invh2;
    });
    return diag;
  }
};

double interior_dot(const GridGeometry& geom, const std::vector<double>& a,
                    const std::vector<double>& b) {
  double acc = 0.0;
  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    acc += a[c] * b[c];
  });
  return acc;
}

// Jacobi-preconditioned conjugate gradients; x holds the warm start on entry
// (interior values, boundary entries zero). Returns iterations used.
int pcg(const LinearOperator& op, const std::vector<double>& b, std::vector<double>& x,
        double rel_tol) {
  const GridGeometry& geom = op.geom;
  const std::size_t size = b.size();
  std::vector<double> r(size, 0.0), z(size, 0.0), p(size, 0.0), q(size, 0.0);
  const std::vector<double> diag = op.diagonal();

  op.apply(x, q);
  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    r[c] = b[c] - q[c];
  });

  const double b_norm = std::sqrt(interior_dot(geom, b, b));
  double r_norm = std::sqrt(interior_dot(geom, r, r));
  const double threshold = rel_tol * (b_norm > 0.0 ? b_norm : r_norm);
  if (r_norm <= threshold) return 0;

  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    z[c] = r[c] / diag[c];
  });
  p = z;
  double rz = interior_dot(geom, r, z);

  std::int64_t interior = 1;
  for (int a = 0; a < geom.dim; ++a) interior *= std::max(1, geom.shape[a] - 2);
  const int max_iter = static_cast<int>(std::min<std::int64_t>(
      interior + 16, std::numeric_limits<int>::max()));

  for (int it = 1; it <= max_iter; ++it) {
    op.apply(p, q);
    const double pq = interior_dot(geom, p, q);
    if (pq <= 0.0) throw std::runtime_error("pcg: operator lost positive definiteness");
    const double alpha = rz / pq;
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      x[c] += alpha * p[c];
      r[c] -= alpha * q[c];
    });
    r_norm = std::sqrt(interior_dot(geom, r, r));
    if (r_norm <= threshold) return it;
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      z[c] = r[c] / diag[c];
    });
    const double rz_new = interior_dot(geom, r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      p[c] = z[c] + beta * p[c];
    });
  }
  throw std::runtime_error("pcg: no convergence within the iteration cap");
}

bool is_boundary(const GridGeometry& geom, int i, int j, int k) {
  const std::array<int, 3> idx{i, j, k};
  for (int a = 0; a < geom.dim; ++a)
    if (idx[a] == 0 || idx[a] == geom.shape[a] - 1) return true;
  return false;
}

// Solves -div(k grad u) = 0 with the given boundary ring, warm-started from
// `u` (which already carries the boundary values). Returns PCG iterations.
int solve_linear(const GridGeometry& geom, const FaceCoefficients& coef,
                 const ScalarField& bc_ext, ScalarField& u, double rel_tol) {
  const LinearOperator op{geom, coef};

  const ScalarField rhs = flux_divergence(bc_ext, coef);
  std::vector<double> b(rhs.values());
  std::vector<double> x(u.values());
  // homogenize: interior warm start, zero on the ring
  for (int i = 0; i < geom.shape[0]; ++i)
    for (int j = 0; j < geom.shape[1]; ++j)
      for (int k = 0; k < geom.shape[2]; ++k)
        if (is_boundary(geom, i, j, k)) x[geom.index(i, j, k)] = 0.0;

  const int its = pcg(op, b, x, rel_tol);

  for_each_point(geom, 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    u.values()[c] = x[c] + bc_ext.values()[c];
  });
  return its;
}

double max_abs_interior(const ScalarField& f) {
  double m = 0.0;
  for_each_point(f.geom(), 1, [&](int i, int j, int k) {
    m = std::max(m, std::fabs(f.at(i, j, k)));
  });
  return m;
}

bool has_nan(const ScalarField& f) {
  for (double v : f.values())
    if (!std::isfinite(v)) return true;
  return false;
}

}  // namespace

EllipticProblem::EllipticProblem(ProblemParams params_, GridGeometry geometry_,
                                 PointFunction boundary_)
    : params(params_), geometry(std::move(geometry_)), boundary(std::move(boundary_)) {
  geometry.validate();
  if (params.eps <= 0.0)
    throw std::invalid_argument("EllipticProblem: eps must be > 0");
  for (int a = 0; a < geometry.dim; ++a)
    if (geometry.shape[a] < 3)
      throw std::invalid_argument("EllipticProblem: needs >= 3 points per axis");
  if (!boundary) throw std::invalid_argument("EllipticProblem: missing boundary data");
}

EllipticSolution solve(const EllipticProblem& problem) {
  const GridGeometry& geom = problem.geometry;
  const double p = problem.params.p;
  const double eps = problem.params.eps;
  if (problem.damping <= 0.0 || problem.damping > 1.0)
    throw std::invalid_argument("solve: damping must be in (0,1]");

  // Boundary extension: boundary values on the ring, zero inside.
  ScalarField bc_ext(geom);
  double bc_sup = 0.0;
  for (int i = 0; i < geom.shape[0]; ++i)
    for (int j = 0; j < geom.shape[1]; ++j)
      for (int k = 0; k < geom.shape[2]; ++k)
        if (is_boundary(geom, i, j, k)) {
          const double g = problem.boundary(geom.point(i, j, k));
          bc_ext.at(i, j, k) = g;
          bc_sup = std::max(bc_sup, std::fabs(g));
        }
  if (!std::isfinite(bc_sup))
    throw std::invalid_argument("solve: boundary data must be bounded");

  ConvergenceLog log;
  const double res_scale = std::max(1.0, bc_sup) / (geom.h * geom.h);

  // Initial guess: the p = 2 solution of the same boundary data.
  ScalarField u = bc_ext;
  {
    const ScalarField unit_u(geom, 0, 0.0);
    const FaceCoefficients ones = face_coefficients(unit_u, 2.0, 1.0);
    log.linear_iterations_total +=
        solve_linear(geom, ones, bc_ext, u, problem.linear_tol);
  }

  FaceCoefficients coef = face_coefficients(u, p, eps);
  {
    PicardIterate first;
    first.iteration = 0;
    first.rel_update = std::numeric_limits<double>::infinity();
    first.residual_max = max_abs_interior(flux_divergence(u, coef));
    log.iterates.push_back(first);
  }

  if (p == 2.0) {
    log.converged = true;
    return {std::move(u), std::move(log)};
  }

  for (int m = 1; m <= problem.max_iterations; ++m) {
    ScalarField u_lin = u;
    log.linear_iterations_total +=
        solve_linear(geom, coef, bc_ext, u_lin, problem.linear_tol);

    double max_update = 0.0, max_val = 0.0;
    for_each_point(geom, 1, [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      const double next =
          u.values()[c] + problem.damping * (u_lin.values()[c] - u.values()[c]);
      max_update = std::max(max_update, std::fabs(next - u.values()[c]));
      max_val = std::max(max_val, std::fabs(next));
      u.values()[c] = next;
    });

    coef = face_coefficients(u, p, eps);
    PicardIterate it;
    it.iteration = m;
    it.rel_update = max_update / std::max(1.0, max_val);
    it.residual_max = max_abs_interior(flux_divergence(u, coef));
    log.iterates.push_back(it);

    if (has_nan(u) || !std::isfinite(it.residual_max))
      throw SolveError("solve: NaN detected at iterate " + std::to_string(m),
                       std::move(log), m);

    if (it.rel_update <= problem.picard_tol &&
        it.residual_max <= problem.residual_tol * res_scale) {
      log.converged = true;
      return {std::move(u), std::move(log)};
    }
  }
  throw SolveError("solve: no convergence within max_iterations", std::move(log));
}

PointFunction radial_reference(int n, double p, std::array<double, 3> center) {
  if (n < 1) throw std::invalid_argument("radial_reference: n must be >= 1");
  if (p <= 1.0) throw std::invalid_argument("radial_reference: p must be > 1");
  const auto radius = [center](const std::array<double, 3>& x) {
    double r2 = 0.0;
    for (int a = 0; a < 3; ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
    return std::sqrt(r2);
  };
  if (p == static_cast<double>(n))
    return [radius](const std::array<double, 3>& x) { return std::log(radius(x)); };
  const double alpha = (p - n) / (p - 1.0);
  return [radius, alpha](const std::array<double, 3>& x) {
    return std::pow(radius(x), alpha);
  };
}

ScalarField nondivergence_residual(const ScalarField& u, const ProblemParams& params) {
  const GridGeometry& geom = u.geom();
  const VectorField g = gradient(u);
  const SymMatrixField h = hessian(u);
  const int m = g.margin();

  ScalarField out(geom, m);
  for_each_point(geom, m, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double lap = 0.0, g2 = 0.0, dinf = 0.0;
    for (int a = 0; a < geom.dim; ++a) {
      lap += h.entry(a, a).values()[c];
      const double ga = g.comp[a].values()[c];
      g2 += ga * ga;
      for (int b = 0; b < geom.dim; ++b)
        dinf += h.entry(a, b).values()[c] * ga * g.comp[b].values()[c];
    }
    // vanishing-gradient convention: gradient-weighted quotients are 0
    const double quotient =
        (g2 + params.eps > 0.0) ? dinf / (g2 + params.eps) : 0.0;
    out.values()[c] = lap + (params.p - 2.0) * quotient;
  });
  return out;
}

std::string convergence_csv(const ConvergenceLog& log) {
  std::string out = "iteration,rel_update,residual_max\r\n";
  char buf[96];
  for (const PicardIterate& it : log.iterates) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\r\n", it.iteration, it.rel_update,
                  it.residual_max);
    out += buf;
  }
  return out;
}

}  // namespace plap
