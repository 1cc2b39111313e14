#include "plap/flux.hpp"

#include <cmath>
#include <stdexcept>

namespace plap {

FaceCoefficients face_coefficients(const ScalarField& u, double p, double eps) {
  const GridGeometry& geom = u.geom();
  for (int a = 0; a < geom.dim; ++a)
    if (geom.shape[a] < 3)
      throw std::invalid_argument("face_coefficients: needs >= 3 points per axis");

  const auto s = geom.strides();
  const double h = geom.h;
  const double exponent = 0.5 * (p - 2.0);
  const double* v = u.data();

  FaceCoefficients out;
  for (int d = 0; d < geom.dim; ++d)
    out.k[d].assign(static_cast<std::size_t>(geom.num_points()), 0.0);

  for (int d = 0; d < geom.dim; ++d) {
    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int a = 0; a < 3; ++a) {
      if (a >= geom.dim) continue;
      lo[a] = a == d ? 0 : 1;
      hi[a] = a == d ? geom.shape[a] - 2 : geom.shape[a] - 2;
    }
    for (int i = lo[0]; i <= hi[0]; ++i)
      for (int j = lo[1]; j <= hi[1]; ++j)
        for (int k = lo[2]; k <= hi[2]; ++k) {
          const std::int64_t c = geom.index(i, j, k);
          const double gn = (v[c + s[d]] - v[c]) / h;
          double g2 = gn * gn;
          for (int e = 0; e < geom.dim; ++e) {
            if (e == d) continue;
            const double gt = 0.5 *
                              ((v[c + s[e]] - v[c - s[e]]) +
                               (v[c + s[d] + s[e]] - v[c + s[d] - s[e]])) /
                              (2.0 * h);
            g2 += gt * gt;
          }
          out.k[d][static_cast<std::size_t>(c)] = std::pow(g2 + eps, exponent);
        }
  }
  return out;
}

ScalarField flux_divergence(const ScalarField& u, const FaceCoefficients& coef) {
  const GridGeometry& geom = u.geom();
  const auto s = geom.strides();
  const double invh2 = 1.0 / (geom.h * geom.h);
  const double* v = u.data();

  ScalarField out(geom, u.margin() + 1);
  for_each_point(geom, u.margin() + 1, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double acc = 0.0;
    for (int d = 0; d < geom.dim; ++d) {
      const double kp = coef.k[d][static_cast<std::size_t>(c)];
      const double km = coef.k[d][static_cast<std::size_t>(c - s[d])];
      acc += kp * (v[c + s[d]] - v[c]) - km * (v[c] - v[c - s[d]]);
    }
    out.values()[c] = acc * invh2;
  });
  return out;
}

ScalarField flux_divergence(const ScalarField& u, const ProblemParams& params) {
  return flux_divergence(u, face_coefficients(u, params.p, params.eps));
}

}  // namespace plap
