#include "plap/stencils.hpp"

#include <stdexcept>

namespace plap {

namespace {

void require_size(const GridGeometry& geom, int out_margin) {
  for (int a = 0; a < geom.dim; ++a)
    if (geom.shape[a] < 2 * out_margin + 1)
      throw std::invalid_argument("stencil: grid too small for requested margin");
}

}  // namespace

VectorField gradient(const ScalarField& f) {
  const GridGeometry& geom = f.geom();
  const int m = f.margin() + 1;
  require_size(geom, m);
  const auto s = geom.strides();
  const double inv2h = 1.0 / (2.0 * geom.h);

  VectorField out;
  out.comp.reserve(geom.dim);
  for (int d = 0; d < geom.dim; ++d) out.comp.emplace_back(geom, m);

  const double* v = f.data();
  for_each_point(geom, m, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    for (int d = 0; d < geom.dim; ++d)
      out.comp[d].values()[c] = (v[c + s[d]] - v[c - s[d]]) * inv2h;
  });
  return out;
}

SymMatrixField hessian(const ScalarField& f) {
  const GridGeometry& geom = f.geom();
  const int m = f.margin() + 1;
  require_size(geom, m);
  const auto s = geom.strides();
  const double invh2 = 1.0 / (geom.h * geom.h);
  const double inv4h2 = 0.25 * invh2;

  SymMatrixField out;
  out.dim = geom.dim;
  const int ncomp = geom.dim * (geom.dim + 1) / 2;
  out.comp.reserve(ncomp);
  for (int c = 0; c < ncomp; ++c) out.comp.emplace_back(geom, m);

  const double* v = f.data();
  for_each_point(geom, m, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    for (int a = 0; a < geom.dim; ++a) {
      out.entry(a, a).values()[c] = (v[c + s[a]] - 2.0 * v[c] + v[c - s[a]]) * invh2;
      for (int b = a + 1; b < geom.dim; ++b)
        out.entry(a, b).values()[c] =
            (v[c + s[a] + s[b]] - v[c + s[a] - s[b]] - v[c - s[a] + s[b]] +
             v[c - s[a] - s[b]]) *
            inv4h2;
    }
  });
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  const GridGeometry& geom = f.geom();
  const int m = f.margin() + 1;
  require_size(geom, m);
  const auto s = geom.strides();
  const double invh2 = 1.0 / (geom.h * geom.h);

  ScalarField out(geom, m);
  const double* v = f.data();
  for_each_point(geom, m, [&](int i, int j, int k) {
    const std::int64_t c = geom.index(i, j, k);
    double acc = 0.0;
    for (int d = 0; d < geom.dim; ++d)
      acc += (v[c + s[d]] - 2.0 * v[c] + v[c - s[d]]) * invh2;
    out.values()[c] = acc;
  });
  return out;
}

}  // namespace plap
