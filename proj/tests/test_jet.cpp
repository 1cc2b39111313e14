#include "plap/jet.hpp"
#include "plap/jet_sampling.hpp"

#include <gtest/gtest.h>

#include <Eigen/QR>

#include <cmath>

namespace plap {
namespace {

PointJet make_jet(std::initializer_list<double> grad,
                  std::initializer_list<std::initializer_list<double>> hess) {
  const int n = static_cast<int>(grad.size());
  Eigen::VectorXd g(n);
  int i = 0;
  for (double v : grad) g[i++] = v;
  Eigen::MatrixXd h(n, n);
  i = 0;
  for (const auto& row : hess) {
    int j = 0;
    for (double v : row) h(i, j++) = v;
    ++i;
  }
  return {g, h};
}

TEST(JetInvariantsTest, DiagonalExample) {
  const PointJet jet = make_jet({1, 0, 0}, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  const JetInvariants inv = invariants(jet);
  EXPECT_DOUBLE_EQ(inv.laplacian, 6.0);
  EXPECT_DOUBLE_EQ(inv.inf_laplacian, 1.0);
  EXPECT_DOUBLE_EQ(inv.hess_grad_sq, 1.0);
  EXPECT_DOUBLE_EQ(inv.hess_frob_sq, 14.0);
  EXPECT_DOUBLE_EQ(inv.grad_sq, 1.0);
}

TEST(JetInvariantsTest, TracefreeExample) {
  const PointJet jet = make_jet({1, 0}, {{1, 2}, {2, -1}});
  const JetInvariants inv = invariants(jet);
  EXPECT_DOUBLE_EQ(inv.laplacian, 0.0);
  EXPECT_DOUBLE_EQ(inv.inf_laplacian, 1.0);
  EXPECT_DOUBLE_EQ(inv.hess_grad_sq, 5.0);
  EXPECT_DOUBLE_EQ(inv.hess_frob_sq, 10.0);
  EXPECT_DOUBLE_EQ(inv.grad_sq, 1.0);
}

TEST(JetInvariantsTest, ZeroGradientConvention) {
  JetSampler sampler(4, 11);
  PointJet jet = sampler.next();
  jet.set_grad(Eigen::VectorXd::Zero(4));
  const JetInvariants inv = invariants(jet);
  EXPECT_EQ(inv.inf_laplacian, 0.0);
  EXPECT_EQ(inv.hess_grad_sq, 0.0);
  EXPECT_EQ(inv.grad_sq, 0.0);
}

TEST(FundamentalResidualTest, PlanarIdentity) {
  const PointJet jet = make_jet({1, 0}, {{1, 2}, {2, -1}});
  const InequalitySides sides = fundamental_residual(jet);
  EXPECT_NEAR(sides.lhs_abs, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(sides.rhs, 0.0);
}

TEST(FundamentalResidualTest, EqualityCaseIdentityHessian) {
  const PointJet jet = make_jet({1, 0, 0}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const InequalitySides sides = fundamental_residual(jet);
  EXPECT_NEAR(sides.lhs_abs, 1.0, 1e-12);
  EXPECT_NEAR(sides.rhs, 1.0, 1e-12);
}

TEST(FundamentalResidualTest, ZeroGradient) {
  JetSampler sampler(5, 13);
  PointJet jet = sampler.next();
  jet.set_grad(Eigen::VectorXd::Zero(5));
  const InequalitySides sides = fundamental_residual(jet);
  EXPECT_EQ(sides.lhs_abs, 0.0);
  EXPECT_EQ(sides.rhs, 0.0);
}

TEST(EigenReducedTest, PlanarVanishes) {
  EigenPair pair;
  pair.lambdas = Eigen::Vector2d(1.0, -1.0);
  pair.avec = Eigen::Vector2d(1.0, 0.0);
  const InequalitySides sides = eigen_reduced_residual(pair);
  EXPECT_DOUBLE_EQ(sides.lhs_abs, 0.0);
  EXPECT_DOUBLE_EQ(sides.rhs, 0.0);
}

TEST(EigenReducedTest, EqualityCase) {
  EigenPair pair;
  pair.lambdas = Eigen::Vector3d(1.0, 1.0, 1.0);
  pair.avec = Eigen::Vector3d(1.0, 0.0, 0.0);
  const InequalitySides sides = eigen_reduced_residual(pair);
  EXPECT_NEAR(sides.lhs_abs, 1.0, 1e-14);
  EXPECT_NEAR(sides.rhs, 1.0, 1e-14);
}

TEST(EigenReducedTest, StrictCase) {
  EigenPair pair;
  pair.lambdas = Eigen::Vector3d(2.0, 0.0, 0.0);
  pair.avec = Eigen::Vector3d(0.0, 1.0, 0.0);
  const InequalitySides sides = eigen_reduced_residual(pair);
  EXPECT_NEAR(sides.lhs_abs, 0.0, 1e-14);
  EXPECT_NEAR(sides.rhs, 2.0, 1e-14);
}

TEST(EigenReducedTest, RejectsNonUnitVector) {
  EigenPair pair;
  pair.lambdas = Eigen::Vector3d(1.0, 2.0, 3.0);
  pair.avec = Eigen::Vector3d(0.5, 0.5, 0.5);
  EXPECT_THROW(eigen_reduced_residual(pair), std::invalid_argument);
  pair.avec.setZero();
  EXPECT_THROW(eigen_reduced_residual(pair), std::invalid_argument);
}

TEST(EigendecomposeTest, AlreadyDiagonal) {
  const PointJet jet = make_jet({0, 1}, {{3, 0}, {0, 1}});
  const EigenPair pair = eigendecompose(jet);
  EXPECT_DOUBLE_EQ(pair.lambdas[0], 3.0);
  EXPECT_DOUBLE_EQ(pair.lambdas[1], 1.0);
  EXPECT_NEAR(std::fabs(pair.avec[0]), 0.0, 1e-14);
  EXPECT_NEAR(std::fabs(pair.avec[1]), 1.0, 1e-14);
}

TEST(EigendecomposeTest, OffDiagonalClosedForm) {
  const PointJet jet = make_jet({1, 0}, {{0, 1}, {1, 0}});
  const EigenPair pair = eigendecompose(jet);
  EXPECT_NEAR(pair.lambdas[0], 1.0, 1e-14);
  EXPECT_NEAR(pair.lambdas[1], -1.0, 1e-14);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(pair.avec[0], inv_sqrt2, 1e-14);
  EXPECT_NEAR(pair.avec[1], inv_sqrt2, 1e-14);
}

TEST(EigendecomposeTest, IdentityHessianDim4) {
  PointJet jet(4);
  for (int i = 0; i < 4; ++i) jet.set_hess(i, i, 1.0);
  Eigen::VectorXd g(4);
  g << 0.5, -0.5, 0.5, 0.5;
  jet.set_grad(g);
  const EigenPair pair = eigendecompose(jet);
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(pair.lambdas[i], 1.0);
  EXPECT_NEAR(pair.avec.norm(), 1.0, 1e-14);
}

TEST(EigendecomposeTest, BasisReconstructsHessian) {
  for (int n = 2; n <= 6; ++n) {
    JetSampler sampler(n, 101 + n);
    for (int trial = 0; trial < 20; ++trial) {
      const PointJet jet = sampler.next();
      Eigen::MatrixXd basis;
      const EigenPair pair = eigendecompose(jet, &basis);
      const Eigen::MatrixXd rebuilt =
          basis * pair.lambdas.asDiagonal() * basis.transpose();
      const Eigen::MatrixXd h = jet.hess_matrix();
      const double scale = std::max(1.0, h.norm());
      EXPECT_LE((rebuilt - h).norm() / scale, 1e-10);
    }
  }
}

TEST(JetPropertyTest, FundamentalInequalityRandomJets) {
  for (int n = 2; n <= 6; ++n) {
    const InequalityCheck check = check_fundamental_inequality(n, 20000);
    EXPECT_LE(check.max_violation, 1e-9) << "n = " << n;
    EXPECT_GE(check.min_rhs, -1e-12) << "n = " << n;
    if (n == 2) EXPECT_LE(check.max_planar_residual, 1e-12);
  }
}

TEST(JetPropertyTest, OrthogonalInvariance) {
  JetSampler sampler(4, 17);
  JetSampler qsampler(4, 23);
  for (int trial = 0; trial < 50; ++trial) {
    const PointJet jet = sampler.next();
    Eigen::MatrixXd m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = qsampler.uniform_signed();
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();

    const PointJet rotated(q.transpose() * jet.grad(),
                           q.transpose() * jet.hess_matrix() * q);
    const InequalitySides a = fundamental_residual(jet);
    const InequalitySides b = fundamental_residual(rotated);
    const double scale = inequality_scale(invariants(jet));
    EXPECT_NEAR(a.lhs_abs, b.lhs_abs, 1e-9 * scale);
    EXPECT_NEAR(a.rhs, b.rhs, 1e-9 * scale);
  }
}

TEST(JetPropertyTest, ScalingCovariance) {
  JetSampler sampler(3, 29);
  const double s = 1.75, t = -2.5;
  for (int trial = 0; trial < 50; ++trial) {
    const PointJet jet = sampler.next();
    const PointJet scaled(t * jet.grad(), s * jet.hess_matrix());
    const InequalitySides a = fundamental_residual(jet);
    const InequalitySides b = fundamental_residual(scaled);
    const double factor = s * s * t * t;
    EXPECT_NEAR(b.lhs_abs, factor * a.lhs_abs, 1e-12 * std::max(1.0, factor * a.lhs_abs));
    EXPECT_NEAR(b.rhs, factor * a.rhs, 1e-12 * std::max(1.0, factor * std::fabs(a.rhs)));
  }
}

// The reduced form is the |g| = 1 slice: both sides of the full inequality
// are |g|^2 times the reduced ones.
TEST(JetPropertyTest, EigenReductionMatchesFundamental) {
  for (int n = 2; n <= 5; ++n) {
    JetSampler sampler(n, 37 + n);
    for (int trial = 0; trial < 100; ++trial) {
      const PointJet jet = sampler.next();
      const JetInvariants inv = invariants(jet);
      if (inv.grad_sq == 0.0) continue;
      const InequalitySides full = fundamental_residual(jet);
      const InequalitySides reduced = eigen_reduced_residual(eigendecompose(jet));
      const double scale = inequality_scale(inv);
      EXPECT_NEAR(full.lhs_abs, inv.grad_sq * reduced.lhs_abs, 1e-9 * scale);
      EXPECT_NEAR(full.rhs, inv.grad_sq * reduced.rhs, 1e-9 * scale);
    }
  }
}

TEST(JetSamplerTest, DeterministicStream) {
  JetSampler a(3, kDefaultJetSeed);
  JetSampler b(3, kDefaultJetSeed);
  for (int i = 0; i < 10; ++i) {
    const PointJet ja = a.next();
    const PointJet jb = b.next();
    EXPECT_EQ(ja.grad(), jb.grad());
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c) EXPECT_EQ(ja.hess(r, c), jb.hess(r, c));
  }
}

}  // namespace
}  // namespace plap
