#pragma once

#include "plap/grid.hpp"

namespace plap {

// Second-order central differences; outputs carry margin = input margin + 1.
// Grids must have at least 3 points per used axis (enough for one interior
// point at margin 0 inputs).

VectorField gradient(const ScalarField& f);

// Diagonal entries by second central differences, mixed entries by the
// 4-point cross stencil; symmetric by construction (packed storage).
SymMatrixField hessian(const ScalarField& f);

// trace of hessian(f), same stencil and summation order as the packed field.
ScalarField laplacian(const ScalarField& f);

}  // namespace plap
