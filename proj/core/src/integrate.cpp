#include "plap/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

namespace {

// Slack absorbing roundoff when region faces land exactly on grid points.
constexpr double kBoundarySlack = 1e-9;

double cell_measure(const GridGeometry& geom) {
  double m = 1.0;
  for (int a = 0; a < geom.dim; ++a) m *= geom.h;
  return m;
}

}  // namespace

IndexBox region_index_box(const GridGeometry& geom, int margin, const Region& region) {
  IndexBox box;
  for (int a = 0; a < 3; ++a) {
    if (a >= geom.dim) continue;
    const double slack = kBoundarySlack * geom.h;
    const double lo_x = region.center[a] - region.radius;
    const double hi_x = region.center[a] + region.radius;
    box.lo[a] = static_cast<int>(std::ceil((lo_x - geom.origin[a] - slack) / geom.h));
    box.hi[a] = static_cast<int>(std::floor((hi_x - geom.origin[a] + slack) / geom.h));
    if (box.lo[a] > box.hi[a])
      throw std::domain_error("region: contains no grid points on axis " +
                              std::to_string(a));
    // The region plus a one-cell margin must be valid.
    if (box.lo[a] < margin + 1 || box.hi[a] > geom.shape[a] - 2 - margin)
      throw std::domain_error(
          "region: exceeds the valid interior (margin " + std::to_string(margin) +
          ", axis " + std::to_string(a) + ")");
  }
  return box;
}

std::pair<int, int> cylinder_layer_range(const SpaceTimeField& f, const Region& region) {
  if (region.kind != Region::Kind::Cylinder)
    throw std::domain_error("region: expected a cylinder");
  const double dt = f.dt();
  const double slack = kBoundarySlack * dt;
  const double t_lo = region.time_anchor - region.radius * region.radius;
  const double t_hi = region.time_anchor;
  // layers with t in (t_lo, t_hi]
  int k_lo = static_cast<int>(std::floor(t_lo / dt + slack)) + 1;
  int k_hi = static_cast<int>(std::floor(t_hi / dt + slack));
  if (k_lo > k_hi) throw std::domain_error("region: cylinder contains no time layers");
  if (k_lo < f.first_valid_layer() || k_hi > f.last_valid_layer())
    throw std::domain_error("region: cylinder exceeds the field's valid time range");
  return {k_lo, k_hi};
}

double integrate(const ScalarField& g, const Region& region) {
  if (region.kind != Region::Kind::Ball)
    throw std::domain_error("integrate(ScalarField): expected a ball region");
  const GridGeometry& geom = g.geom();
  const IndexBox box = region_index_box(geom, g.margin(), region);
  KahanSum sum;
  for (int i = box.lo[0]; i <= box.hi[0]; ++i)
    for (int j = box.lo[1]; j <= box.hi[1]; ++j)
      for (int k = box.lo[2]; k <= box.hi[2]; ++k) sum.add(g.at(i, j, k));
  return sum.value() * cell_measure(geom);
}

double integrate(const SpaceTimeField& g, const Region& region) {
  const GridGeometry& geom = g.geom();
  const IndexBox box = region_index_box(geom, g.margin(), region);
  const auto [k_lo, k_hi] = cylinder_layer_range(g, region);
  KahanSum sum;
  for (int layer = k_lo; layer <= k_hi; ++layer)
    for (int i = box.lo[0]; i <= box.hi[0]; ++i)
      for (int j = box.lo[1]; j <= box.hi[1]; ++j)
        for (int k = box.lo[2]; k <= box.hi[2]; ++k) sum.add(g.at(layer, i, j, k));
  return sum.value() * cell_measure(geom) * g.dt();
}

namespace {

template <class FieldT>
double lq_norm_impl(const FieldT& g, const Region& region, double q) {
  if (q <= 0.0) throw std::domain_error("lq_norm: requires q > 0");
  FieldT powed = g;
  for (double& v : powed.values()) v = std::pow(std::fabs(v), q);
  return std::pow(integrate(powed, region), 1.0 / q);
}

}  // namespace

double lq_norm(const ScalarField& g, const Region& region, double q) {
  return lq_norm_impl(g, region, q);
}

double lq_norm(const SpaceTimeField& g, const Region& region, double q) {
  return lq_norm_impl(g, region, q);
}

}  // namespace plap
