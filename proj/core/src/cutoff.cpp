#include "plap/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace plap {

double bump_profile(double distance, double r) {
  if (r <= 0.0) throw std::invalid_argument("bump_profile: r must be positive");
  const double d = std::fabs(distance);
  if (d <= r) return 1.0;
  if (d >= 2.0 * r) return 0.0;
  const double u = (d - r) / r;  // in (0,1)
  return 1.0 - u * u * (3.0 - 2.0 * u);
}

ScalarField bump_cutoff(const GridGeometry& geom, const Region& inner) {
  return ScalarField::sample(geom, [&](const std::array<double, 3>& x) {
    double phi = 1.0;
    for (int a = 0; a < geom.dim; ++a)
      phi *= bump_profile(x[a] - inner.center[a], inner.radius);
    return phi;
  });
}

}  // namespace plap
