#include "plap/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace plap {

void GridGeometry::validate() const {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("GridGeometry: dim must be 1, 2, or 3");
  if (h <= 0.0) throw std::invalid_argument("GridGeometry: h must be positive");
  for (int a = 0; a < 3; ++a) {
    if (a < dim && shape[a] < 1)
      throw std::invalid_argument("GridGeometry: shape entries must be >= 1");
    if (a >= dim && shape[a] != 1)
      throw std::invalid_argument("GridGeometry: unused axes must have extent 1");
  }
}

GridGeometry GridGeometry::unit_square(int cells_per_axis, int dim,
                                       std::array<double, 3> origin) {
  GridGeometry g;
  g.dim = dim;
  g.h = 1.0 / cells_per_axis;
  g.origin = origin;
  for (int a = 0; a < 3; ++a) g.shape[a] = a < dim ? cells_per_axis + 1 : 1;
  g.validate();
  return g;
}

ScalarField::ScalarField(const GridGeometry& geom, int margin, double fill)
    : geom_(geom), margin_(margin) {
  geom_.validate();
  values_.assign(static_cast<std::size_t>(geom_.num_points()), fill);
}

ScalarField ScalarField::sample(const GridGeometry& geom, const PointFunction& f) {
  ScalarField out(geom);
  for (int i = 0; i < geom.shape[0]; ++i)
    for (int j = 0; j < geom.shape[1]; ++j)
      for (int k = 0; k < geom.shape[2]; ++k)
        out.at(i, j, k) = f(geom.point(i, j, k));
  return out;
}

bool ScalarField::valid(int i, int j, int k) const {
  const std::array<int, 3> idx{i, j, k};
  for (int a = 0; a < geom_.dim; ++a)
    if (idx[a] < margin_ || idx[a] > geom_.shape[a] - 1 - margin_) return false;
  return true;
}

double ScalarField::max_abs_valid() const {
  double m = 0.0;
  for_each_point(geom_, margin_, [&](int i, int j, int k) {
    m = std::max(m, std::fabs(at(i, j, k)));
  });
  return m;
}

int SymMatrixField::pack_index(int i, int j, int dim) {
  if (i > j) std::swap(i, j);
  return i * dim - i * (i - 1) / 2 + (j - i);
}

SpaceTimeField::SpaceTimeField(const GridGeometry& geom, double dt, int steps,
                               int margin)
    : geom_(geom), dt_(dt), steps_(steps), margin_(margin), time_hi_(steps) {
  geom_.validate();
  if (dt <= 0.0) throw std::invalid_argument("SpaceTimeField: dt must be positive");
  if (steps < 0) throw std::invalid_argument("SpaceTimeField: steps must be >= 0");
  layer_size_ = static_cast<std::size_t>(geom_.num_points());
  values_.assign(layer_size_ * (steps + 1), 0.0);
}

ScalarField SpaceTimeField::layer_field(int k) const {
  ScalarField out(geom_, margin_);
  const auto src = layer(k);
  std::copy(src.begin(), src.end(), out.values().begin());
  return out;
}

Region Region::ball(std::array<double, 3> center, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("Region: radius must be positive");
  Region r;
  r.kind = Kind::Ball;
  r.center = center;
  r.radius = radius;
  return r;
}

Region Region::cylinder(std::array<double, 3> center, double radius,
                        double time_anchor) {
  Region r = ball(center, radius);
  r.kind = Kind::Cylinder;
  r.time_anchor = time_anchor;
  return r;
}

Region Region::doubled() const {
  Region r = *this;
  r.radius = 2.0 * radius;
  return r;
}

void for_each_point(const GridGeometry& geom, int margin,
                    const std::function<void(int, int, int)>& f) {
  std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int a = 0; a < 3; ++a) {
    lo[a] = a < geom.dim ? margin : 0;
    hi[a] = a < geom.dim ? geom.shape[a] - 1 - margin : 0;
  }
  for (int i = lo[0]; i <= hi[0]; ++i)
    for (int j = lo[1]; j <= hi[1]; ++j)
      for (int k = lo[2]; k <= hi[2]; ++k) f(i, j, k);
}

}  // namespace plap
