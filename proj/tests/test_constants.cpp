#include "plap/constants.hpp"
#include "plap/jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace plap {
namespace {

TEST(GammaThresholdTest, KnownValues) {
  EXPECT_DOUBLE_EQ(gamma_threshold(2, 3.0), 5.0);  // p + 2 in the plane
  EXPECT_DOUBLE_EQ(gamma_threshold(3, 1.5), 3.0);  // p + n/(n-1) branch
  EXPECT_DOUBLE_EQ(gamma_threshold(3, 4.0), 4.5);  // 3 + (p-1)/(n-1) branch
}

TEST(GammaThresholdTest, RejectsOutOfRange) {
  EXPECT_THROW(gamma_threshold(1, 3.0), std::domain_error);
  EXPECT_THROW(gamma_threshold(3, 1.0), std::domain_error);
}

TEST(KConstantTest, KnownValues) {
  EXPECT_EQ(k_constant(3, 2.0), 1.0);  // exactly 1 at p = 2
  EXPECT_EQ(k_constant(7, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(k_constant(2, 3.0), 1.25);
  EXPECT_DOUBLE_EQ(k_constant(3, 3.0), 1.5);
}

TEST(KConstantTest, RejectsOutsideAdmissibleInterval) {
  EXPECT_THROW(k_constant(3, 5.0), std::domain_error);  // p = 3 + 2/(n-2)
  EXPECT_THROW(k_constant(3, 6.0), std::domain_error);
  EXPECT_THROW(k_constant(4, 4.0), std::domain_error);
  EXPECT_THROW(k_constant(3, 1.0), std::domain_error);
  EXPECT_NO_THROW(k_constant(2, 50.0));  // no upper bound in the plane
}

TEST(KConstantTest, AtLeastOneWithEqualityOnlyAtTwo) {
  for (int n = 2; n <= 6; ++n) {
    const double hi = n <= 2 ? 12.0 : 3.0 + 2.0 / (n - 2.0);
    for (double p = 1.05; p < hi - 1e-9; p += 0.05) {
      const double k = k_constant(n, p);
      EXPECT_GE(k, 1.0 - 1e-13) << "n=" << n << " p=" << p;
      if (std::fabs(p - 2.0) > 0.02) EXPECT_GT(k, 1.0) << "n=" << n << " p=" << p;
    }
  }
}

TEST(CCoefficientTest, KnownValues) {
  EXPECT_DOUBLE_EQ(c_coefficient(2, 3.0, 4.0), 1.0);
  EXPECT_NEAR(c_coefficient(2, 3.0, 5.0), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(c_coefficient(3, 4.0, 3.0), 9.0 / 8.0);
}

TEST(CCoefficientTest, RejectsPEqualTwo) {
  EXPECT_THROW(c_coefficient(3, 2.0, 1.0), std::domain_error);
}

TEST(CCoefficientTest, SignFlipsAcrossThresholdRoot) {
  for (int n = 2; n <= 5; ++n)
    for (double p : {1.5, 3.0, 4.0, 6.0}) {
      const double root = 3.0 + (p - 1.0) / (n - 1.0);
      EXPECT_GT(c_coefficient(n, p, root - 0.1), 0.0);
      EXPECT_LT(c_coefficient(n, p, root + 0.1), 0.0);
      EXPECT_NEAR(c_coefficient(n, p, root), 0.0, 1e-12);
    }
}

// For p > 2 the 3 + (p-1)/(n-1) branch is the active one, so c > 0 on the
// whole admissible range.
TEST(CCoefficientTest, PositiveBelowGammaThreshold) {
  for (int n = 2; n <= 5; ++n)
    for (double p : {2.5, 3.0, 4.0, 6.0}) {
      const double threshold = gamma_threshold(n, p);
      for (double gamma = threshold - 2.0; gamma < threshold - 1e-6; gamma += 0.1)
        EXPECT_GT(c_coefficient(n, p, gamma), 0.0) << "n=" << n << " p=" << p;
    }
}

TEST(CoefficientMatrixTest, IdentityCases) {
  Eigen::VectorXd g(3);
  g << 0.3, -1.2, 0.5;
  const Eigen::MatrixXd a2 = coefficient_matrix(ProblemParams(3, 2.0, 0.0), g);
  EXPECT_LE((a2 - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-15);

  const Eigen::MatrixXd a15 =
      coefficient_matrix(ProblemParams(3, 1.5, 1e-3), Eigen::VectorXd::Zero(3));
  EXPECT_LE((a15 - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-15);
}

TEST(CoefficientMatrixTest, RankOneUpdateAlongAxis) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(3);
  g[0] = 2.0;
  const Eigen::MatrixXd a = coefficient_matrix(ProblemParams(3, 3.0, 0.0), g);
  Eigen::MatrixXd expect = Eigen::MatrixXd::Identity(3, 3);
  expect(0, 0) = 2.0;
  EXPECT_LE((a - expect).norm(), 1e-15);
}

TEST(CoefficientMatrixTest, RejectsDegenerate) {
  EXPECT_THROW(coefficient_matrix(ProblemParams(2, 3.0, 0.0), Eigen::VectorXd::Zero(2)),
               std::domain_error);
}

TEST(CoefficientMatrixTest, EigenvaluesMatchClosedForm) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const double p = trial % 2 == 0 ? 3.4 : 1.3;
    const double eps = 1e-2;
    Eigen::VectorXd g(n);
    for (int i = 0; i < n; ++i) g[i] = unif(rng);
    const Eigen::MatrixXd a = coefficient_matrix(ProblemParams(n, p, eps), g);

    PointJet jet(Eigen::VectorXd::Ones(n), a);
    const EigenPair pair = eigendecompose(jet);
    const double spiked = 1.0 + (p - 2.0) * g.squaredNorm() / (g.squaredNorm() + eps);
    Eigen::VectorXd expect = Eigen::VectorXd::Ones(n);
    if (p >= 2.0)
      expect[0] = spiked;  // non-increasing order puts the spike first
    else
      expect[n - 1] = spiked;
    for (int i = 0; i < n; ++i) EXPECT_NEAR(pair.lambdas[i], expect[i], 1e-12);
  }
}

TEST(CordesEllipticTest, KnownValues) {
  const CordesMargin m33 = cordes_margin_elliptic(3, 3.0);
  EXPECT_NEAR(m33.delta, 2.0 / 3.0, 1e-14);
  EXPECT_TRUE(m33.admissible);

  const CordesMargin m35 = cordes_margin_elliptic(3, 5.0);
  EXPECT_NEAR(m35.delta, 0.0, 1e-14);
  EXPECT_FALSE(m35.admissible);

  for (int n = 2; n <= 6; ++n) {
    const CordesMargin m = cordes_margin_elliptic(n, 2.0);
    EXPECT_NEAR(m.delta, 1.0, 1e-13);
    EXPECT_TRUE(m.admissible);
  }
}

TEST(CordesEllipticTest, ZeroCrossingAtRangeBoundary) {
  for (int n : {3, 4, 5}) {
    const double p_star = 3.0 + 2.0 / (n - 2.0);
    EXPECT_NEAR(cordes_margin_elliptic(n, p_star).delta, 0.0, 1e-10);
    EXPECT_TRUE(cordes_margin_elliptic(n, p_star - 0.05).admissible);
    EXPECT_FALSE(cordes_margin_elliptic(n, p_star + 0.05).admissible);
  }
}

TEST(CordesEllipticTest, AdmissiblePredicateOnGrid) {
  int checked = 0;
  for (int n = 3; n <= 6; ++n)
    for (double p = 1.1; p <= 6.0; p += 0.1, ++checked) {
      const bool predicted = p < 3.0 + 2.0 / (n - 2.0);
      EXPECT_EQ(cordes_margin_elliptic(n, p).admissible, predicted)
          << "n=" << n << " p=" << p;
    }
  EXPECT_GE(checked, 200);
}

TEST(CordesParabolicTest, KnownValues) {
  const CordesMargin m25 = cordes_margin_parabolic(2, 5.0);
  EXPECT_NEAR(m25.delta, 0.0, 1e-14);
  EXPECT_FALSE(m25.admissible);

  const CordesMargin m22 = cordes_margin_parabolic(2, 2.0);
  EXPECT_NEAR(m22.delta, 1.0, 1e-14);
  EXPECT_TRUE(m22.admissible);

  const CordesMargin m36 = cordes_margin_parabolic(3, 6.0);
  EXPECT_NEAR(m36.delta, 64.0 / 28.0 - 3.0, 1e-14);
  EXPECT_FALSE(m36.admissible);
}

TEST(CordesParabolicTest, ZeroCrossingAtRangeBoundary) {
  for (int n : {2, 3, 4}) {
    const double p_star = 3.0 + 2.0 / (n - 1.0);
    EXPECT_NEAR(cordes_margin_parabolic(n, p_star).delta, 0.0, 1e-10);
    EXPECT_TRUE(cordes_margin_parabolic(n, p_star - 0.05).admissible);
    EXPECT_FALSE(cordes_margin_parabolic(n, p_star + 0.05).admissible);
  }
}

TEST(ProblemParamsTest, Validation) {
  EXPECT_NO_THROW(ProblemParams(2, 1.5, 0.0));
  EXPECT_THROW(ProblemParams(0, 2.0, 0.0), std::domain_error);
  EXPECT_THROW(ProblemParams(2, 1.0, 0.0), std::domain_error);
  EXPECT_THROW(ProblemParams(2, 2.0, -1.0), std::domain_error);
}

TEST(ExponentBoundsTest, DegenerateDimensions) {
  EXPECT_TRUE(std::isinf(w22_exponent_bound(2)));
  EXPECT_DOUBLE_EQ(w22_exponent_bound(3), 5.0);
  EXPECT_DOUBLE_EQ(w22_exponent_bound(4), 4.0);
  EXPECT_DOUBLE_EQ(parabolic_w22_exponent_bound(2), 5.0);
  EXPECT_DOUBLE_EQ(parabolic_w22_exponent_bound(3), 4.0);
}

}  // namespace
}  // namespace plap
