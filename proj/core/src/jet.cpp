#include "plap/jet.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace plap {

PointJet::PointJet(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("PointJet: dimension must be >= 1");
  grad_ = Eigen::VectorXd::Zero(n);
  hess_upper_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
}

PointJet::PointJet(Eigen::VectorXd grad, const Eigen::MatrixXd& hess)
    : PointJet(static_cast<int>(grad.size())) {
  if (hess.rows() != n_ || hess.cols() != n_)
    throw std::invalid_argument("PointJet: gradient/Hessian dimension mismatch");
  grad_ = std::move(grad);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      set_hess(i, j, 0.5 * (hess(i, j) + hess(j, i)));
}

void PointJet::set_grad(Eigen::VectorXd g) {
  if (g.size() != n_)
    throw std::invalid_argument("PointJet: gradient dimension mismatch");
  grad_ = std::move(g);
}

Eigen::MatrixXd PointJet::hess_matrix() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m(i, j) = m(j, i) = hess(i, j);
  return m;
}

std::size_t PointJet::triangle_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
         static_cast<std::size_t>(j - i);
}

JetInvariants invariants(const PointJet& jet) {
  const int n = jet.dim();
  JetInvariants inv;
  for (int i = 0; i < n; ++i) {
    inv.laplacian += jet.hess(i, i);
    inv.grad_sq += jet.grad()[i] * jet.grad()[i];
    for (int j = i; j < n; ++j) {
      const double hij = jet.hess(i, j);
      inv.hess_frob_sq += (i == j ? 1.0 : 2.0) * hij * hij;
    }
  }
  if (inv.grad_sq == 0.0) return inv;  // gradient-weighted terms stay exactly 0
  for (int i = 0; i < n; ++i) {
    double hg = 0.0;
    for (int j = 0; j < n; ++j) hg += jet.hess(i, j) * jet.grad()[j];
    inv.hess_grad_sq += hg * hg;
    inv.inf_laplacian += hg * jet.grad()[i];
  }
  return inv;
}

InequalitySides fundamental_residual(const JetInvariants& inv, int n) {
  InequalitySides sides;
  sides.lhs_abs = std::fabs(inv.hess_grad_sq - inv.laplacian * inv.inf_laplacian -
                            0.5 * (inv.hess_frob_sq - inv.laplacian * inv.laplacian) *
                                inv.grad_sq);
  sides.rhs = 0.5 * (n - 2) * (inv.hess_frob_sq * inv.grad_sq - inv.hess_grad_sq);
  return sides;
}

InequalitySides fundamental_residual(const PointJet& jet) {
  return fundamental_residual(invariants(jet), jet.dim());
}

double inequality_scale(const JetInvariants& inv) {
  return std::max(1.0, inv.hess_frob_sq * inv.grad_sq);
}

InequalitySides eigen_reduced_residual(const EigenPair& pair) {
  const auto n = pair.lambdas.size();
  if (pair.avec.size() != n)
    throw std::invalid_argument("eigen_reduced_residual: size mismatch");
  const double norm = pair.avec.norm();
  if (std::fabs(norm - 1.0) > kUnitAvecTolerance)
    throw std::invalid_argument("eigen_reduced_residual: |avec| must be 1");
  double s1 = 0.0, s2 = 0.0, m1 = 0.0, m2 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double l = pair.lambdas[i];
    const double a2 = pair.avec[i] * pair.avec[i];
    s1 += l;
    s2 += l * l;
    m1 += l * a2;
    m2 += l * l * a2;
  }
  InequalitySides sides;
  sides.lhs_abs = std::fabs(m2 - s1 * m1 - 0.5 * (s2 - s1 * s1));
  sides.rhs = 0.5 * (static_cast<double>(n) - 2.0) * (s2 - m2);
  return sides;
}

EigenPair eigendecompose(const PointJet& jet, Eigen::MatrixXd* basis) {
  const int n = jet.dim();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jet.hess_matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: eigensolver failed to converge");

  // Eigen returns ascending eigenvalues; reverse to non-increasing, keeping
  // the solver's relative order for ties.
  EigenPair pair;
  pair.lambdas.resize(n);
  Eigen::MatrixXd vecs(n, n);
  for (int c = 0; c < n; ++c) {
    pair.lambdas[c] = solver.eigenvalues()[n - 1 - c];
    vecs.col(c) = solver.eigenvectors().col(n - 1 - c);
    int arg = 0;
    for (int r = 1; r < n; ++r)
      if (std::fabs(vecs(r, c)) > std::fabs(vecs(arg, c))) arg = r;
    if (vecs(arg, c) < 0.0) vecs.col(c) = -vecs.col(c);
  }

  pair.avec = vecs.transpose() * jet.grad();
  const double norm = pair.avec.norm();
  if (norm > 0.0)
    pair.avec /= norm;
  else
    pair.avec.setZero();

  if (basis != nullptr) *basis = vecs;
  return pair;
}

}  // namespace plap
