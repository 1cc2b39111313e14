#include "plap/reports.hpp"

#include "plap/field_io.hpp"
#include "plap/integrate.hpp"
#include "plap/stencils.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

namespace {

void fill_common(EstimateReport& r, const ProblemParams& params, const GridGeometry& g) {
  r.n = params.n;
  r.p = params.p;
  r.eps = params.eps;
  r.h = g.h;
}

void require_cutoff_supported(const ScalarField& cutoff, int needed_margin) {
  const GridGeometry& geom = cutoff.geom();
  for (int i = 0; i < geom.shape[0]; ++i)
    for (int j = 0; j < geom.shape[1]; ++j)
      for (int k = 0; k < geom.shape[2]; ++k) {
        const std::array<int, 3> idx{i, j, k};
        bool valid = true;
        for (int a = 0; a < geom.dim; ++a)
          if (idx[a] < needed_margin || idx[a] > geom.shape[a] - 1 - needed_margin)
            valid = false;
        if (!valid && cutoff.at(i, j, k) != 0.0)
          throw std::domain_error(
              "cutoff: support must stay inside the valid interior");
      }
}

void refuse_gamma(int n, double p, double gamma) {
  const double threshold = gamma_threshold(n, p);
  if (gamma >= threshold)
    throw std::domain_error("gamma " + format_double(gamma) +
                            " is not admissible: the estimate requires gamma < " +
                            format_double(threshold) +
                            " = min{p + n/(n-1), 3 + (p-1)/(n-1)}");
}

double cell_measure(const GridGeometry& geom) {
  double m = 1.0;
  for (int a = 0; a < geom.dim; ++a) m *= geom.h;
  return m;
}

// Layers of (s - r^2, s] clipped against nothing; throws when outside
// [0, max_layer] or empty.
std::pair<int, int> layer_range(double dt, const Region& cyl, int max_layer) {
  const double slack = 1e-9 * dt;
  const double t_lo = cyl.time_anchor - cyl.radius * cyl.radius;
  int k_lo = static_cast<int>(std::floor(t_lo / dt + slack)) + 1;
  int k_hi = static_cast<int>(std::floor(cyl.time_anchor / dt + slack));
  if (k_lo > k_hi)
    throw std::domain_error("cylinder: contains no time layers");
  if (k_lo < 0 || k_hi > max_layer)
    throw std::domain_error("cylinder: exceeds the field's valid time range");
  return {k_lo, k_hi};
}

}  // namespace

EstimateReport divergence_identity_report(const ScalarField& f, const ScalarField& cutoff,
                                          double rel_error_cap) {
  const GridGeometry& geom = f.geom();
  if (!(cutoff.geom() == geom))
    throw std::invalid_argument("divergence_identity_report: geometry mismatch");

  const VectorField g = gradient(f);
  const SymMatrixField hess_f = hessian(f);
  const ScalarField phi2_grad_src = [&] {
    ScalarField phi2 = cutoff;
    for (double& v : phi2.values()) v *= v;
    return phi2;
  }();
  const VectorField dphi2 = gradient(phi2_grad_src);

  const int m = std::max(g.margin(), dphi2.margin());
  require_cutoff_supported(cutoff, m + 1);

  KahanSum lhs_sum, rhs_sum;
  for_each_point(geom, m, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    const double phi = cutoff.values()[c];
    double frob = 0.0, lap = 0.0;
    for (int a = 0; a < geom.dim; ++a) {
      lap += hess_f.entry(a, a).values()[c];
      for (int b = a; b < geom.dim; ++b) {
        const double hab = hess_f.entry(a, b).values()[c];
        frob += (a == b ? 1.0 : 2.0) * hab * hab;
      }
    }
    lhs_sum.add((frob - lap * lap) * phi * phi);
    double dot = 0.0;
    for (int a = 0; a < geom.dim; ++a) {
      double va = -lap * g.comp[a].values()[c];
      for (int b = 0; b < geom.dim; ++b)
        va += hess_f.entry(a, b).values()[c] * g.comp[b].values()[c];
      dot += va * dphi2.comp[a].values()[c];
    }
    rhs_sum.add(-dot);
  });

  EstimateReport r;
  r.name = "divergence-identity";
  r.statement =
      "int (|D2f|^2 - (lap f)^2) phi^2 = -int (D2f Df - lap f Df) . D(phi^2)";
  r.n = geom.dim;
  r.h = geom.h;
  r.lhs = lhs_sum.value() * cell_measure(geom);
  r.rhs_raw = rhs_sum.value() * cell_measure(geom);
  const double denom = std::max({std::fabs(r.lhs), std::fabs(r.rhs_raw), 1e-300});
  const double rel_err = std::fabs(r.lhs - r.rhs_raw) / denom;
  if (r.rhs_raw > 0.0) r.ratio = r.lhs / r.rhs_raw;
  r.tolerance = rel_error_cap;
  r.pass = rel_err <= rel_error_cap;
  r.notes = "relative identity error " + format_double(rel_err);
  return r;
}

EstimateReport power_gradient_energy_report(const ScalarField& u,
                                            const ProblemParams& params, double gamma,
                                            const Region& ball) {
  refuse_gamma(params.n, params.p, gamma);
  const GridGeometry& geom = u.geom();
  const double expo = 0.25 * (params.p - gamma);

  const VectorField g = gradient(u);
  VectorField w;
  w.comp.reserve(geom.dim);
  for (int d = 0; d < geom.dim; ++d) w.comp.emplace_back(geom, g.margin());
  for_each_point(geom, g.margin(), [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double g2 = 0.0;
    for (int d = 0; d < geom.dim; ++d) {
      const double gd = g.comp[d].values()[c];
      g2 += gd * gd;
    }
    const double factor = std::pow(g2 + params.eps, expo);
    for (int d = 0; d < geom.dim; ++d)
      w.comp[d].values()[c] = factor * g.comp[d].values()[c];
  });

  ScalarField density(geom, g.margin() + 1);
  for (int d = 0; d < geom.dim; ++d) {
    const VectorField jac = gradient(w.comp[d]);
    for_each_point(geom, jac.margin(), [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      for (int e = 0; e < geom.dim; ++e) {
        const double je = jac.comp[e].values()[c];
        density.values()[c] += je * je;
      }
    });
  }

  ScalarField rhs_density(geom, g.margin());
  const double rhs_expo = 0.5 * (params.p - gamma + 2.0);
  for_each_point(geom, g.margin(), [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double g2 = 0.0;
    for (int d = 0; d < geom.dim; ++d) {
      const double gd = g.comp[d].values()[c];
      g2 += gd * gd;
    }
    rhs_density.values()[c] = std::pow(g2 + params.eps, rhs_expo);
  });

  EstimateReport r;
  r.name = "power-gradient-energy";
  r.statement =
      "int_B |D[(|Du|^2+eps)^{(p-gamma)/4} Du]|^2 <= C r^-2 int_2B "
      "(|Du|^2+eps)^{(p-gamma+2)/2}";
  fill_common(r, params, geom);
  r.gamma = gamma;
  r.region = ball;
  r.lhs = integrate(density, ball);
  r.rhs_raw = integrate(rhs_density, ball.doubled()) / (ball.radius * ball.radius);
  if (r.rhs_raw > 0.0) r.ratio = r.lhs / r.rhs_raw;
  r.pass = std::isfinite(r.ratio);
  r.notes = "ratio boundedness judged across refinements";
  return r;
}

EstimateReport hessian_sign_bound_report(const ScalarField& u,
                                         const ProblemParams& params,
                                         const Region& ball, double tol_c1,
                                         double tol_c2) {
  const double k_np = k_constant(params.n, params.p);  // refuses p out of range
  const GridGeometry& geom = u.geom();
  const SymMatrixField hess_u = hessian(u);

  const IndexBox box = region_index_box(geom, hess_u.margin(), ball);
  double min_expr = std::numeric_limits<double>::infinity();
  for (int i = box.lo[0]; i <= box.hi[0]; ++i)
    for (int j = box.lo[1]; j <= box.hi[1]; ++j)
      for (int k = box.lo[2]; k <= box.hi[2]; ++k) {
        const std::int64_t c = geom.index(i, j, k);
        double frob = 0.0, lap = 0.0;
        for (int a = 0; a < geom.dim; ++a) {
          lap += hess_u.entry(a, a).values()[c];
          for (int b = a; b < geom.dim; ++b) {
            const double hab = hess_u.entry(a, b).values()[c];
            frob += (a == b ? 1.0 : 2.0) * hab * hab;
          }
        }
        min_expr = std::min(min_expr, (frob - lap * lap) - frob / k_np);
      }

  EstimateReport r;
  r.name = "hessian-sign-bound";
  r.statement = "|D2u|^2 - (lap u)^2 >= (1/K_{n,p}) |D2u|^2 pointwise";
  fill_common(r, params, geom);
  r.region = ball;
  r.lhs = std::max(0.0, -min_expr);  // worst violation
  r.rhs_raw = tol_c1 * geom.h + tol_c2 * params.eps;
  r.tolerance = r.rhs_raw;
  r.ratio = r.lhs / r.rhs_raw;
  r.pass = r.lhs <= r.rhs_raw;
  r.notes = "min margin " + format_double(min_expr) + ", K = " + format_double(k_np);
  return r;
}

EstimateReport quasiregularity_report(const ScalarField& u, const ProblemParams& params,
                                      const Region& ball, double tol_c1, double tol_c2) {
  if (params.n != 2 || u.geom().dim != 2)
    throw std::domain_error("quasiregularity_report: planar estimate, requires n = 2");
  const GridGeometry& geom = u.geom();
  const double coef =
      ((params.p - 1.0) * (params.p - 1.0) + 1.0) / (params.p - 1.0);
  const SymMatrixField hess_u = hessian(u);

  const IndexBox box = region_index_box(geom, hess_u.margin(), ball);
  double max_expr = -std::numeric_limits<double>::infinity();
  for (int i = box.lo[0]; i <= box.hi[0]; ++i)
    for (int j = box.lo[1]; j <= box.hi[1]; ++j) {
      const std::int64_t c = geom.index(i, j, 0);
      const double a = hess_u.entry(0, 0).values()[c];
      const double b = hess_u.entry(0, 1).values()[c];
      const double d = hess_u.entry(1, 1).values()[c];
      const double frob = a * a + 2.0 * b * b + d * d;
      const double det = a * d - b * b;
      max_expr = std::max(max_expr, frob + coef * det);
    }

  EstimateReport r;
  r.name = "quasiregularity";
  r.statement = "|D2u|^2 <= -((p-1)^2+1)/(p-1) det D2u pointwise (n = 2)";
  fill_common(r, params, geom);
  r.region = ball;
  r.lhs = std::max(0.0, max_expr);  // worst violation
  r.rhs_raw = tol_c1 * geom.h + tol_c2 * params.eps;
  r.tolerance = r.rhs_raw;
  r.ratio = r.lhs / r.rhs_raw;
  r.pass = r.lhs <= r.rhs_raw;
  r.notes = "max margin " + format_double(max_expr);
  return r;
}

EstimateReport weighted_energy_report(const ScalarField& u, const ProblemParams& params,
                                      double gamma, const ScalarField& cutoff) {
  refuse_gamma(params.n, params.p, gamma);
  if (params.eps <= 0.0)
    throw std::domain_error("weighted_energy_report: requires eps > 0");
  const GridGeometry& geom = u.geom();
  if (!(cutoff.geom() == geom))
    throw std::invalid_argument("weighted_energy_report: geometry mismatch");

  const VectorField g = gradient(u);
  const SymMatrixField hess_u = hessian(u);
  const VectorField dphi = gradient(cutoff);
  const int m = std::max(hess_u.margin(), dphi.margin());
  require_cutoff_supported(cutoff, m + 1);

  const double w_expo = 0.5 * (params.p - gamma);
  const double rhs_expo = 0.5 * (params.p - gamma + 2.0);
  KahanSum lhs_sum, rhs_sum;
  for_each_point(geom, m, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    const double phi = cutoff.values()[c];
    double g2 = 0.0, lap = 0.0, hg2 = 0.0, dphi2 = 0.0;
    for (int a = 0; a < geom.dim; ++a) {
      const double ga = g.comp[a].values()[c];
      g2 += ga * ga;
      lap += hess_u.entry(a, a).values()[c];
      const double da = dphi.comp[a].values()[c];
      dphi2 += da * da;
      double hg = 0.0;
      for (int b = 0; b < geom.dim; ++b)
        hg += hess_u.entry(a, b).values()[c] * g.comp[b].values()[c];
      hg2 += hg * hg;
    }
    const double weight = std::pow(g2 + params.eps, w_expo);
    lhs_sum.add((hg2 / (g2 + params.eps) + lap * lap) * weight * phi * phi);
    rhs_sum.add(std::pow(g2 + params.eps, rhs_expo) * dphi2);
  });

  EstimateReport r;
  r.name = "weighted-energy";
  r.statement =
      "int [|D2u Du|^2/(|Du|^2+eps) + (lap u)^2] (|Du|^2+eps)^{(p-gamma)/2} phi^2 "
      "<= C int (|Du|^2+eps)^{(p-gamma+2)/2} |Dphi|^2";
  fill_common(r, params, geom);
  r.gamma = gamma;
  r.lhs = lhs_sum.value() * cell_measure(geom);
  r.rhs_raw = rhs_sum.value() * cell_measure(geom);
  if (r.rhs_raw > 0.0) r.ratio = r.lhs / r.rhs_raw;
  r.pass = std::isfinite(r.ratio);
  r.notes = "ratio boundedness judged across refinements";
  return r;
}

EstimateReport parabolic_energy_report(const SpaceTimeField& u,
                                       const ProblemParams& params,
                                       ParabolicEstimate estimate,
                                       const Region& cylinder) {
  if (cylinder.kind != Region::Kind::Cylinder)
    throw std::domain_error("parabolic_energy_report: expected a cylinder region");
  const GridGeometry& geom = u.geom();
  const double p = params.p;

  const bool needs_ut = estimate != ParabolicEstimate::SecondOrderDivergence;
  const bool needs_hess = estimate != ParabolicEstimate::TimeDerivative;
  if (estimate == ParabolicEstimate::SecondOrderNormalized &&
      p >= w22_exponent_bound(params.n))
    throw std::domain_error(
        "parabolic_energy_report: second-order normalized estimate requires "
        "p < 3 + 2/(n-2)");
  if (estimate == ParabolicEstimate::SecondOrderDivergence && !(p > 1.0 && p < 3.0))
    throw std::domain_error(
        "parabolic_energy_report: second-order divergence estimate requires "
        "1 < p < 3");

  const Region outer = cylinder.doubled();
  const int max_layer = needs_ut ? u.steps() - 1 : u.steps();
  const auto [lo_in, hi_in] = layer_range(u.dt(), cylinder, max_layer);
  const auto [lo_out, hi_out] = layer_range(u.dt(), outer, u.steps());
  const int m1 = u.margin() + 1;
  const IndexBox box_in = region_index_box(geom, needs_hess ? m1 : u.margin(), cylinder);
  const IndexBox box_out = region_index_box(geom, m1, outer);

  const double cell = cell_measure(geom) * u.dt();
  const double inv_dt = 1.0 / u.dt();

  KahanSum lhs_sum;
  for (int layer = lo_in; layer <= hi_in; ++layer) {
    const ScalarField slice = u.layer_field(layer);
    SymMatrixField hess_l;
    if (needs_hess) hess_l = hessian(slice);
    for (int i = box_in.lo[0]; i <= box_in.hi[0]; ++i)
      for (int j = box_in.lo[1]; j <= box_in.hi[1]; ++j)
        for (int k = box_in.lo[2]; k <= box_in.hi[2]; ++k) {
          const std::int64_t c = geom.index(i, j, k);
          double term = 0.0;
          if (needs_ut) {
            const double ut = (u.layer(layer + 1)[c] - u.layer(layer)[c]) * inv_dt;
            term += ut * ut;
          }
          if (needs_hess) {
            double frob = 0.0;
            for (int a = 0; a < geom.dim; ++a)
              for (int b = a; b < geom.dim; ++b) {
                const double hab = hess_l.entry(a, b).values()[c];
                frob += (a == b ? 1.0 : 2.0) * hab * hab;
              }
            if (estimate == ParabolicEstimate::SecondOrderNormalized ||
                estimate == ParabolicEstimate::SecondOrderDivergence)
              term += frob;
          }
          lhs_sum.add(term);
        }
  }

  KahanSum rhs_sum;
  for (int layer = lo_out; layer <= hi_out; ++layer) {
    const ScalarField slice = u.layer_field(layer);
    const VectorField g = gradient(slice);
    for (int i = box_out.lo[0]; i <= box_out.hi[0]; ++i)
      for (int j = box_out.lo[1]; j <= box_out.hi[1]; ++j)
        for (int k = box_out.lo[2]; k <= box_out.hi[2]; ++k) {
          const std::int64_t c = geom.index(i, j, k);
          double g2 = 0.0;
          for (int d = 0; d < geom.dim; ++d) {
            const double gd = g.comp[d].values()[c];
            g2 += gd * gd;
          }
          switch (estimate) {
            case ParabolicEstimate::SecondOrderNormalized:
              rhs_sum.add(g2);
              break;
            case ParabolicEstimate::TimeDerivative:
              rhs_sum.add(std::pow(g2, 0.5 * p) + std::pow(g2, 0.5 * (2.0 * p - 2.0)));
              break;
            case ParabolicEstimate::SecondOrderDivergence:
              rhs_sum.add(g2 + std::pow(g2, 0.5 * (4.0 - p)));
              break;
          }
        }
  }

  EstimateReport r;
  switch (estimate) {
    case ParabolicEstimate::SecondOrderNormalized:
      r.name = "parabolic-second-order-normalized";
      r.statement = "int_Qr (u_t^2 + |D2u|^2) <= C r^-2 int_Q2r |Du|^2";
      break;
    case ParabolicEstimate::TimeDerivative:
      r.name = "parabolic-time-derivative";
      r.statement = "int_Qr u_t^2 <= C r^-2 int_Q2r (|Du|^p + |Du|^{2p-2})";
      break;
    case ParabolicEstimate::SecondOrderDivergence:
      r.name = "parabolic-second-order-divergence";
      r.statement = "int_Qr |D2u|^2 <= C r^-2 int_Q2r (|Du|^2 + |Du|^{4-p})";
      break;
  }
  fill_common(r, params, geom);
  r.dt = u.dt();
  r.region = cylinder;
  r.lhs = lhs_sum.value() * cell;
  r.rhs_raw = rhs_sum.value() * cell / (cylinder.radius * cylinder.radius);
  if (r.rhs_raw > 0.0) r.ratio = r.lhs / r.rhs_raw;
  r.pass = std::isfinite(r.ratio);
  r.notes = "ratio boundedness judged across refinements";
  return r;
}

std::vector<double> dyadic_spacings(double h0, int levels) {
  std::vector<double> out;
  double h = h0;
  for (int k = 0; k < levels; ++k, h *= 0.5) out.push_back(h);
  return out;
}

SharpnessScan sharpness_scan(double p, const std::vector<double>& spacings) {
  if (p <= 1.0) throw std::invalid_argument("sharpness_scan: p must be > 1");
  if (spacings.size() < 3)
    throw std::invalid_argument("sharpness_scan: needs at least 3 spacings");

  const double beta = p / (p - 1.0);
  const double r = 0.25;  // cylinder B(0, r) x time length r^2, inside [-0.5, 0.5]^2
  SharpnessScan scan;
  scan.p = p;

  for (const double h : spacings) {
    const double half_cells = 0.5 / h;
    const int m = static_cast<int>(std::llround(half_cells));
    if (std::fabs(half_cells - m) > 1e-9 || m < 4)
      throw std::invalid_argument(
          "sharpness_scan: spacing must divide 0.5 (grid keeps x1 = 0 aligned)");

    GridGeometry geom;
    geom.dim = 2;
    geom.h = h;
    geom.origin = {-0.5, -0.5, 0.0};
    geom.shape = {2 * m + 1, 2 * m + 1, 1};

    const ScalarField w = ScalarField::sample(geom, [&](const std::array<double, 3>& x) {
      return std::pow(std::fabs(x[0]), beta);
    });
    const SymMatrixField hess_w = hessian(w);
    ScalarField density(geom, hess_w.margin());
    for_each_point(geom, hess_w.margin(), [&](int i, int j, int k) {
      const std::int64_t c = geom.index(i, j, k);
      for (int a = 0; a < geom.dim; ++a)
        for (int b = a; b < geom.dim; ++b) {
          const double hab = hess_w.entry(a, b).values()[c];
          density.values()[c] += (a == b ? 1.0 : 2.0) * hab * hab;
        }
    });
    const double value = r * r * integrate(density, Region::ball({0.0, 0.0, 0.0}, r));
    scan.levels.push_back({h, value});
  }

  const std::size_t n = scan.levels.size();
  std::vector<double> inc;
  for (std::size_t i = 0; i + 1 < n; ++i)
    inc.push_back(scan.levels[i + 1].value - scan.levels[i].value);

  scan.last_rel_increment = std::fabs(inc.back()) /
                            std::max(std::fabs(scan.levels[n - 1].value), 1e-300);
  const std::size_t window = std::min<std::size_t>(3, inc.size());
  double mean = 0.0;
  for (std::size_t i = inc.size() - window; i < inc.size(); ++i) mean += inc[i];
  mean /= static_cast<double>(window);
  scan.fitted_log_coefficient = mean / std::log(2.0);

  // Regime read off the finest increment ratio rho = I_m/I_{m-1}:
  // geometric decay (or a sign change) means the column is Cauchy, rho near 1
  // means constant increments (logarithmic growth), larger rho a power law
  // with exponent log2(rho). Shallow scans read the pre-asymptotic ratio, so
  // near-boundary exponents may classify as plain "divergent".
  const double prev = inc[inc.size() - 2];
  const double rho = prev != 0.0 ? inc.back() / prev
                                 : std::numeric_limits<double>::infinity();
  if (inc.back() > 0.0 && prev > 0.0) scan.fitted_rate = std::log2(rho);
  if (inc.back() <= 0.0 || rho < 0.95)
    scan.classification = "convergent";
  else if (rho <= 1.05)
    scan.classification = "log-divergent";
  else
    scan.classification = "divergent";
  return scan;
}

double cusp_example(const std::array<double, 3>& x) {
  return std::cbrt(2.0) * std::pow(x[0], 4.0 / 3.0) - std::pow(x[1], 4.0 / 3.0) -
         std::pow(x[2], 4.0 / 3.0);
}

double cusp_hessian_gap(const std::array<double, 3>& x) {
  const double a = std::pow(x[0], -2.0 / 3.0);
  const double b = std::pow(x[1], -2.0 / 3.0);
  const double c = std::pow(x[2], -2.0 / 3.0);
  return 32.0 / 81.0 * (std::cbrt(2.0) * a * (b + c) - b * c);
}

std::vector<SignProbeResult> sign_change_probe(
    const std::vector<std::array<double, 3>>& points, double h) {
  if (h <= 0.0) throw std::invalid_argument("sign_change_probe: h must be positive");
  std::vector<SignProbeResult> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    double min_coord = x[0];
    for (int a = 0; a < 3; ++a) {
      if (x[a] <= 0.0)
        throw std::invalid_argument(
            "sign_change_probe: all coordinates must be positive");
      min_coord = std::min(min_coord, x[a]);
    }
    const double hl = std::min(h, 0.5 * min_coord);

    GridGeometry geom;
    geom.dim = 3;
    geom.h = hl;
    geom.shape = {3, 3, 3};
    geom.origin = {x[0] - hl, x[1] - hl, x[2] - hl};
    const ScalarField w = ScalarField::sample(geom, cusp_example);
    const SymMatrixField hess_w = hessian(w);

    double frob = 0.0, lap = 0.0;
    for (int a = 0; a < 3; ++a) {
      lap += hess_w.entry(a, a).at(1, 1, 1);
      for (int b = a; b < 3; ++b) {
        const double hab = hess_w.entry(a, b).at(1, 1, 1);
        frob += (a == b ? 1.0 : 2.0) * hab * hab;
      }
    }
    out.push_back({x, cusp_hessian_gap(x), frob - lap * lap});
  }
  return out;
}

RefinementStudy ratio_boundedness_study(
    const std::function<EstimateReport(double)>& make,
    const std::vector<double>& spacings, double cap) {
  if (spacings.size() < 2)
    throw std::invalid_argument("ratio_boundedness_study: needs >= 2 spacings");
  RefinementStudy study;
  study.cap = cap;
  for (const double h : spacings) study.levels.push_back(make(h));
  const double coarse = study.levels.front().ratio;
  const double fine = study.levels.back().ratio;
  study.pass = std::isfinite(coarse) && std::isfinite(fine) && fine <= cap * coarse;
  return study;
}

}  // namespace plap
