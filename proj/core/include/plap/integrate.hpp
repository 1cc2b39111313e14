#pragma once

#include "plap/grid.hpp"

namespace plap {

// Compensated (Kahan) accumulator; region integrals add terms in fixed
// row-major index order so results do not depend on how work is split.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Inclusive per-axis index range of the grid points inside a region's box.
struct IndexBox {
  std::array<int, 3> lo{0, 0, 0};
  std::array<int, 3> hi{0, 0, 0};
};

// Spatial index box of B(z,r) (or the spatial part of a cylinder). Throws
// std::domain_error unless the box plus a one-cell margin lies inside the
// field's valid interior.
IndexBox region_index_box(const GridGeometry& geom, int margin, const Region& region);

// Inclusive layer range of the cylinder's time interval (s - r^2, s].
// Throws unless it is nonempty and within the field's valid layers.
std::pair<int, int> cylinder_layer_range(const SpaceTimeField& f, const Region& region);

// Midpoint-rule integral: sum of values at grid points inside the region
// times h^n (times dt for cylinders). Ball regions only.
double integrate(const ScalarField& g, const Region& region);

// Cylinder version for space-time scalars.
double integrate(const SpaceTimeField& g, const Region& region);

// (integral of |g|^q)^{1/q}; requires q > 0.
double lq_norm(const ScalarField& g, const Region& region, double q);
double lq_norm(const SpaceTimeField& g, const Region& region, double q);

}  // namespace plap
