#pragma once

#include "plap/grid.hpp"

namespace plap {

// 1D piecewise-cubic bump profile: 1 for |d| <= r, 0 for |d| >= 2r, cubic
// Hermite step in between (C^1). |profile'| <= 1.5/r.
double bump_profile(double distance, double r);

// Tensor-product cutoff: identically 1 on B(z,r), supported in B(z,2r).
ScalarField bump_cutoff(const GridGeometry& geom, const Region& inner);

}  // namespace plap
