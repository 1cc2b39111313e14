#pragma once

#include "plap/constants.hpp"
#include "plap/grid.hpp"

namespace plap {

// Face-centered coefficients k = (|Du|^2_face + eps)^{(p-2)/2} for the
// conservative discretization of div([|Du|^2+eps]^{(p-2)/2} Du). The face
// gradient takes its normal part from the two-point difference across the
// face and each tangential part as the average of the central differences
// at the two adjacent nodes.
//
// k[d] is stored at the index of the lower node of each face along axis d
// (face between P and P+e_d), for i_d in [0, extent_d-2] and tangential
// indices in [1, extent-2]; other entries are unused and left 0.
struct FaceCoefficients {
  std::array<std::vector<double>, 3> k;
};

FaceCoefficients face_coefficients(const ScalarField& u, double p, double eps);

// Flux divergence sum_d (k+ (u+ - u) - k- (u - u-))/h^2 at interior points
// (margin 1); boundary ring of the output is 0.
ScalarField flux_divergence(const ScalarField& u, const FaceCoefficients& coef);
ScalarField flux_divergence(const ScalarField& u, const ProblemParams& params);

}  // namespace plap
