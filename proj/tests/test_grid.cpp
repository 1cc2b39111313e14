#include "plap/cutoff.hpp"
#include "plap/field_io.hpp"
#include "plap/grid.hpp"
#include "plap/integrate.hpp"
#include "plap/stencils.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

namespace plap {
namespace {

GridGeometry square(double lo, double hi, int cells, int dim = 2) {
  GridGeometry g;
  g.dim = dim;
  g.h = (hi - lo) / cells;
  for (int a = 0; a < 3; ++a) {
    g.shape[a] = a < dim ? cells + 1 : 1;
    g.origin[a] = a < dim ? lo : 0.0;
  }
  return g;
}

TEST(GridGeometryTest, IndexingRoundTrip) {
  GridGeometry g = square(0.0, 1.0, 4, 3);
  EXPECT_EQ(g.num_points(), 125);
  EXPECT_EQ(g.index(0, 0, 0), 0);
  EXPECT_EQ(g.index(1, 2, 3), 1 * 25 + 2 * 5 + 3);
  EXPECT_DOUBLE_EQ(g.coord(0, 2), 0.5);
  GridGeometry bad;
  bad.dim = 2;
  bad.shape[0] = 4;
  bad.shape[1] = 4;
  bad.shape[2] = 2;  // unused axis must have extent 1
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

// Dyadic coefficients so all stencil arithmetic is exact.
TEST(StencilTest, GradientExactOnAffine) {
  const GridGeometry g = square(0.0, 1.0, 8);
  const ScalarField f = ScalarField::sample(
      g, [](const std::array<double, 3>& x) { return 0.5 * x[0] - 0.25 * x[1] + 0.125; });
  const VectorField grad = gradient(f);
  for_each_point(g, grad.margin(), [&](int i, int j, int k) {
    EXPECT_EQ(grad.comp[0].at(i, j, k), 0.5);
    EXPECT_EQ(grad.comp[1].at(i, j, k), -0.25);
  });
}

TEST(StencilTest, GradientExactOnQuadratic) {
  const GridGeometry g = square(0.0, 1.0, 16);
  const ScalarField f =
      ScalarField::sample(g, [](const std::array<double, 3>& x) { return x[0] * x[0]; });
  const VectorField grad = gradient(f);
  for_each_point(g, grad.margin(), [&](int i, int j, int k) {
    EXPECT_EQ(grad.comp[0].at(i, j, k), 2.0 * g.coord(0, i));
  });
}

TEST(StencilTest, HessianExactOnQuadraticForm) {
  const GridGeometry g = square(-1.0, 1.0, 16);
  // (1/2) x^T A x with A = [[2, 0.5], [0.5, -1]]
  const ScalarField f = ScalarField::sample(g, [](const std::array<double, 3>& x) {
    return x[0] * x[0] + 0.5 * x[0] * x[1] - 0.5 * x[1] * x[1];
  });
  const SymMatrixField h = hessian(f);
  for_each_point(g, h.margin(), [&](int i, int j, int k) {
    EXPECT_NEAR(h.entry(0, 0).at(i, j, k), 2.0, 1e-12);
    EXPECT_NEAR(h.entry(0, 1).at(i, j, k), 0.5, 1e-12);
    EXPECT_NEAR(h.entry(1, 1).at(i, j, k), -1.0, 1e-12);
  });

  const ScalarField affine = ScalarField::sample(
      g, [](const std::array<double, 3>& x) { return 0.75 * x[0] - 0.5 * x[1] + 2.0; });
  const SymMatrixField ha = hessian(affine);
  for_each_point(g, ha.margin(), [&](int i, int j, int k) {
    EXPECT_EQ(ha.entry(0, 0).at(i, j, k), 0.0);
    EXPECT_EQ(ha.entry(0, 1).at(i, j, k), 0.0);
    EXPECT_EQ(ha.entry(1, 1).at(i, j, k), 0.0);
  });
}

double max_gradient_error_sin(int cells) {
  const GridGeometry g = square(0.0, 1.0, cells);
  const ScalarField f = ScalarField::sample(
      g, [](const std::array<double, 3>& x) { return std::sin(x[0]); });
  const VectorField grad = gradient(f);
  double err = 0.0;
  for_each_point(g, grad.margin(), [&](int i, int j, int k) {
    err = std::max(err, std::fabs(grad.comp[0].at(i, j, k) - std::cos(g.coord(0, i))));
  });
  return err;
}

TEST(StencilTest, GradientSecondOrderOnSine) {
  const double e1 = max_gradient_error_sin(16);
  const double e2 = max_gradient_error_sin(32);
  const double ratio = e1 / e2;  // ~4 for a second-order stencil
  EXPECT_GE(ratio, 4.0 / 1.25);
  EXPECT_LE(ratio, 4.0 * 1.25);
}

double max_hessian_error_sincos(int cells) {
  const GridGeometry g = square(0.0, 1.0, cells);
  const ScalarField f = ScalarField::sample(g, [](const std::array<double, 3>& x) {
    return std::sin(x[0]) * std::cos(x[1]);
  });
  const SymMatrixField h = hessian(f);
  double err = 0.0;
  for_each_point(g, h.margin(), [&](int i, int j, int k) {
    const double x = g.coord(0, i), y = g.coord(1, j);
    err = std::max(err, std::fabs(h.entry(0, 0).at(i, j, k) + std::sin(x) * std::cos(y)));
    err = std::max(err, std::fabs(h.entry(0, 1).at(i, j, k) + std::cos(x) * std::sin(y)));
  });
  return err;
}

TEST(StencilTest, HessianSecondOrderOnSineCosine) {
  const double ratio = max_hessian_error_sincos(16) / max_hessian_error_sincos(32);
  EXPECT_GE(ratio, 4.0 / 1.3);
  EXPECT_LE(ratio, 4.0 * 1.3);
}

TEST(StencilTest, LinearInInput) {
  const GridGeometry g = square(0.0, 1.0, 12);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  ScalarField a(g), b(g), combo(g);
  for (std::int64_t c = 0; c < g.num_points(); ++c) {
    a.values()[c] = unif(rng);
    b.values()[c] = unif(rng);
    combo.values()[c] = 2.0 * a.values()[c] - 3.0 * b.values()[c];
  }
  const VectorField ga = gradient(a), gb = gradient(b), gc = gradient(combo);
  for_each_point(g, gc.margin(), [&](int i, int j, int k) {
    for (int d = 0; d < 2; ++d)
      EXPECT_NEAR(gc.comp[d].at(i, j, k),
                  2.0 * ga.comp[d].at(i, j, k) - 3.0 * gb.comp[d].at(i, j, k), 1e-10);
  });
}

TEST(StencilTest, RejectsTooSmallGrid) {
  GridGeometry g = square(0.0, 1.0, 1);
  const ScalarField f(g);
  EXPECT_THROW(gradient(f), std::invalid_argument);
}

TEST(IntegrateTest, ConstantOverBox) {
  const GridGeometry g = square(-1.0, 1.0, 32);
  const ScalarField one(g, 0, 1.0);
  const double r = 0.25;
  const double integral = integrate(one, Region::ball({0.0, 0.0, 0.0}, r));
  EXPECT_NEAR(integral, 4.0 * r * r, 1.05 * g.h * 8.0 * r);
}

TEST(IntegrateTest, OddSymmetryCancels) {
  const GridGeometry g = square(-1.0, 1.0, 32);
  const ScalarField f =
      ScalarField::sample(g, [](const std::array<double, 3>& x) { return x[0]; });
  EXPECT_NEAR(integrate(f, Region::ball({0.0, 0.0, 0.0}, 0.5)), 0.0, 1e-13);
}

TEST(IntegrateTest, QuadraticMidpointRule) {
  // Cell-centered alignment: region faces bisect cells, so the closed point
  // sum is the composite midpoint rule over [-1,1]^2.
  const int cells = 40;
  GridGeometry g = square(-1.25, 1.25, cells);
  g.origin = {-1.25 + g.h / 2.0, -1.25 + g.h / 2.0, 0.0};
  const ScalarField f =
      ScalarField::sample(g, [](const std::array<double, 3>& x) { return x[0] * x[0]; });
  const double integral = integrate(f, Region::ball({0.0, 0.0, 0.0}, 1.0));
  EXPECT_NEAR(integral, 4.0 / 3.0, g.h * g.h);
}

TEST(IntegrateTest, AdditiveOverDisjointRegions) {
  GridGeometry g;
  g.dim = 1;
  g.h = 0.125;
  g.shape = {13, 1, 1};
  g.origin = {-0.25, 0.0, 0.0};
  const ScalarField f = ScalarField::sample(
      g, [](const std::array<double, 3>& x) { return std::cos(3.0 * x[0]) + 2.0; });
  // A = [0.11, 0.51], B = [0.55, 0.99]: the gap (0.51, 0.55) holds no grid
  // point, so A u B covers exactly the points of C = [0.11, 0.99].
  const double ia = integrate(f, Region::ball({0.31, 0.0, 0.0}, 0.20));
  const double ib = integrate(f, Region::ball({0.77, 0.0, 0.0}, 0.22));
  const double ic = integrate(f, Region::ball({0.55, 0.0, 0.0}, 0.44));
  EXPECT_NEAR(ia + ib, ic, 1e-14);
}

TEST(IntegrateTest, RejectsRegionBeyondValidInterior) {
  const GridGeometry g = square(0.0, 1.0, 16);
  const ScalarField f(g, 0, 1.0);
  EXPECT_THROW(integrate(f, Region::ball({0.5, 0.5, 0.0}, 0.55)), std::domain_error);
  ScalarField derived(g, 2, 1.0);
  EXPECT_NO_THROW(integrate(derived, Region::ball({0.5, 0.5, 0.0}, 0.25)));
  EXPECT_THROW(integrate(derived, Region::ball({0.5, 0.5, 0.0}, 0.4)), std::domain_error);
}

TEST(LqNormTest, MatchesClosedForms) {
  const GridGeometry g = square(-1.0, 1.0, 64);
  const ScalarField one(g, 0, 1.0);
  const Region ball = Region::ball({0.0, 0.0, 0.0}, 0.25);
  EXPECT_NEAR(lq_norm(one, ball, 1.0), integrate(one, ball), 1e-14);
  EXPECT_NEAR(lq_norm(one, ball, 2.0), std::sqrt(integrate(one, ball)), 1e-14);

  const ScalarField f =
      ScalarField::sample(g, [](const std::array<double, 3>& x) { return x[0]; });
  GridGeometry gc = g;
  gc.origin = {-1.0 + g.h / 2.0, -1.0 + g.h / 2.0, 0.0};
  const ScalarField fc =
      ScalarField::sample(gc, [](const std::array<double, 3>& x) { return x[0]; });
  // integral of x^2 over [-0.5,0.5]^2 = 1/12
  EXPECT_NEAR(lq_norm(fc, Region::ball({0.0, 0.0, 0.0}, 0.5), 2.0),
              std::sqrt(1.0 / 12.0), 5e-4);
  EXPECT_THROW(lq_norm(f, ball, 0.0), std::domain_error);
}

TEST(SpaceTimeFieldTest, CylinderIntegration) {
  const GridGeometry g = square(0.0, 1.0, 8);
  SpaceTimeField f(g, 0.01, 100);
  for (int layer = 0; layer <= 100; ++layer)
    for (double& v : f.layer(layer)) v = 1.0;
  // Q_r(z, s) with r = 0.25, s = 0.5: times in (0.4375, 0.5] -> layers 44..50
  const Region q = Region::cylinder({0.5, 0.5, 0.0}, 0.25, 0.5);
  const double integral = integrate(f, q);
  const int layers = 7;
  const int pts = 5 * 5;  // |x - 0.5| <= 0.25 on a h=1/8 grid: 5 points per axis
  EXPECT_NEAR(integral, layers * pts * g.h * g.h * 0.01, 1e-12);

  SpaceTimeField cut = f;
  cut.set_valid_layers(0, 45);
  EXPECT_THROW(integrate(cut, q), std::domain_error);
}

TEST(CutoffTest, ProfileAndSupport) {
  EXPECT_DOUBLE_EQ(bump_profile(0.0, 0.2), 1.0);
  EXPECT_DOUBLE_EQ(bump_profile(0.2, 0.2), 1.0);
  EXPECT_DOUBLE_EQ(bump_profile(0.4, 0.2), 0.0);
  EXPECT_DOUBLE_EQ(bump_profile(0.3, 0.2), 0.5);
  EXPECT_DOUBLE_EQ(bump_profile(-0.3, 0.2), 0.5);

  const GridGeometry g = square(0.0, 1.0, 64);
  const Region inner = Region::ball({0.5, 0.5, 0.0}, 0.15);
  const ScalarField phi = bump_cutoff(g, inner);
  for_each_point(g, 0, [&](int i, int j, int k) {
    const auto x = g.point(i, j, k);
    const double d = std::max(std::fabs(x[0] - 0.5), std::fabs(x[1] - 0.5));
    if (d <= 0.15) EXPECT_DOUBLE_EQ(phi.at(i, j, k), 1.0);
    if (d >= 0.30) EXPECT_DOUBLE_EQ(phi.at(i, j, k), 0.0);
  });

  // |D phi| <= 1.5/r per axis (plus discretization slack)
  const VectorField dphi = gradient(phi);
  double dmax = 0.0;
  for_each_point(g, dphi.margin(), [&](int i, int j, int k) {
    for (int d = 0; d < 2; ++d) dmax = std::max(dmax, std::fabs(dphi.comp[d].at(i, j, k)));
  });
  EXPECT_LE(dmax, 1.5 / 0.15 * 1.05);
}

TEST(FieldIoTest, ScalarRoundTrip) {
  const GridGeometry g = square(-0.5, 0.5, 12);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  ScalarField f(g, 1);
  for (double& v : f.values()) v = unif(rng);

  const std::string path =
      (std::filesystem::temp_directory_path() / "plap_grid_roundtrip.plap").string();
  write_field(path, f);
  const ScalarField back = read_scalar_field(path);
  EXPECT_TRUE(back.geom() == g);
  EXPECT_EQ(back.margin(), 1);
  EXPECT_EQ(back.values(), f.values());
  std::filesystem::remove(path);
}

TEST(FieldIoTest, SpaceTimeRoundTrip) {
  const GridGeometry g = square(0.0, 1.0, 6);
  SpaceTimeField f(g, 0.5, 3, 1);
  f.set_valid_layers(0, 2);
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (double& v : f.values()) v = unif(rng);

  const std::string path =
      (std::filesystem::temp_directory_path() / "plap_st_roundtrip.plap").string();
  write_field(path, f);
  const SpaceTimeField back = read_spacetime_field(path);
  EXPECT_TRUE(back.geom() == g);
  EXPECT_DOUBLE_EQ(back.dt(), 0.5);
  EXPECT_EQ(back.steps(), 3);
  EXPECT_EQ(back.last_valid_layer(), 2);
  EXPECT_EQ(back.values(), f.values());
  std::filesystem::remove(path);
}

TEST(FieldIoTest, CsvExport) {
  GridGeometry g;
  g.dim = 1;
  g.h = 0.5;
  g.shape = {3, 1, 1};
  ScalarField f(g);
  f.at(0) = 1.0;
  f.at(1) = 2.0;
  f.at(2) = 3.0;
  const std::string csv = field_csv(f);
  EXPECT_EQ(csv, "x,value\r\n0,1\r\n0.5,2\r\n1,3\r\n");
}

}  // namespace
}  // namespace plap
