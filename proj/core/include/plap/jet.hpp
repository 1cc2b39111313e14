#pragma once

#include <Eigen/Core>

#include <vector>

namespace plap {

// Second-order jet of a scalar function at a point: gradient vector and
// symmetric Hessian. Only the upper triangle of the Hessian is stored, so
// symmetry holds by construction.
class PointJet {
 public:
  explicit PointJet(int n);
  // Symmetrizes the Hessian argument as (H + H^T)/2.
  PointJet(Eigen::VectorXd grad, const Eigen::MatrixXd& hess);

  int dim() const { return n_; }

  const Eigen::VectorXd& grad() const { return grad_; }
  void set_grad(Eigen::VectorXd g);

  double hess(int i, int j) const { return hess_upper_[triangle_index(i, j)]; }
  // Writes the (i,j) and (j,i) entries at once.
  void set_hess(int i, int j, double value) {
    hess_upper_[triangle_index(i, j)] = value;
  }
  Eigen::MatrixXd hess_matrix() const;

 private:
  std::size_t triangle_index(int i, int j) const;

  int n_;
  Eigen::VectorXd grad_;
  std::vector<double> hess_upper_;  // row-major upper triangle, i <= j
};

// The five differential invariants of a jet. With v the underlying function:
// laplacian      = trace D^2v
// inf_laplacian  = D^2v Dv . Dv
// hess_grad_sq   = |D^2v Dv|^2
// hess_frob_sq   = |D^2v|^2
// grad_sq        = |Dv|^2
// Gradient-weighted quantities are exactly 0 when the gradient vanishes.
struct JetInvariants {
  double laplacian = 0.0;
  double inf_laplacian = 0.0;
  double hess_grad_sq = 0.0;
  double hess_frob_sq = 0.0;
  double grad_sq = 0.0;
};

JetInvariants invariants(const PointJet& jet);

// Both sides of the structural inequality
//   | |Hg|^2 - tr(H) (Hg.g) - 1/2 (|H|^2 - tr(H)^2) |g|^2 |
//       <= (n-2)/2 (|H|^2 |g|^2 - |Hg|^2),
// an identity (rhs = 0) in the plane.
struct InequalitySides {
  double lhs_abs = 0.0;
  double rhs = 0.0;
};

InequalitySides fundamental_residual(const PointJet& jet);
InequalitySides fundamental_residual(const JetInvariants& inv, int n);

// Natural scale of both sides: max(1, |H|^2 |g|^2). Both sides are
// homogeneous of degree (2,2) in (H, g), so tolerances are taken relative
// to this.
double inequality_scale(const JetInvariants& inv);

// Eigen-reduced form of a jet: eigenvalues of the Hessian and the gradient
// coordinates in the eigenbasis, normalized to a unit vector (zero vector
// when the gradient vanishes).
struct EigenPair {
  Eigen::VectorXd lambdas;  // non-increasing
  Eigen::VectorXd avec;     // |avec| = 1, or 0 for a vanishing gradient
};

// Tolerance on | |avec| - 1 | accepted by eigen_reduced_residual.
inline constexpr double kUnitAvecTolerance = 1e-8;

// The same inequality written in (lambda_i, a_i) variables with |a| = 1.
// Throws std::invalid_argument when |avec| is not 1 within kUnitAvecTolerance.
InequalitySides eigen_reduced_residual(const EigenPair& pair);

// Spectral reduction of a jet. When `basis` is non-null it receives the
// orthogonal eigenbasis (columns ordered like lambdas, each column's
// largest-magnitude entry made nonnegative).
EigenPair eigendecompose(const PointJet& jet, Eigen::MatrixXd* basis = nullptr);

}  // namespace plap
