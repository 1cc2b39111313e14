#pragma once

#include <Eigen/Core>

namespace plap {

// The parameter triple every equation and constant depends on: dimension n,
// exponent p of the p-Laplacian, and the regularization eps added to |Du|^2.
struct ProblemParams {
  int n;
  double p;
  double eps;

  ProblemParams(int n_, double p_, double eps_);
};

// Largest delta for which the Cordes inequality holds at the worst-case
// coefficient matrix; admissible iff delta > 0.
struct CordesMargin {
  double delta = 0.0;
  bool admissible = false;
};

// gamma_{n,p} = min{ p + n/(n-1), 3 + (p-1)/(n-1) }: the admissible range of
// the weight exponent gamma in the second-order energy estimates is
// gamma < gamma_{n,p}.  Requires n >= 2, p > 1.
double gamma_threshold(int n, double p);

// Upper end of the exponent range for the W^{2,2} theory: 3 + 2/(n-2),
// read as +infinity when n <= 2.
double w22_exponent_bound(int n);

// Parabolic counterpart 3 + 2/(n-1).
double parabolic_w22_exponent_bound(int n);

// K_{n,p} = ((p-1)^2 + n - 1) / ((p-1) [n - (n-2)(p-2)]).  Its reciprocal is
// the coefficient in the pointwise lower bound
//   |D^2u|^2 - (Delta u)^2 >= (1/K_{n,p}) |D^2u|^2.
// Requires 1 < p < 3 + 2/(n-2) (denominator positive).
double k_constant(int n, double p);

// c(n,p,gamma) = (p-1)/(2(p-2)^2) [ (n-1)(p-gamma) - (n-2)(p-2) + n ]:
// the coefficient controlling the weighted energy estimate. Positive iff
// gamma < 3 + (p-1)/(n-1), zero exactly at that threshold. Rejects p = 2.
double c_coefficient(int n, double p, double gamma);

// Nondivergence-form coefficients a_ij = delta_ij + (p-2) g_i g_j/(|g|^2+eps).
// Eigenvalues are 1 (multiplicity n-1) and 1 + (p-2)|g|^2/(|g|^2+eps).
// Requires eps > 0 or g != 0.
Eigen::MatrixXd coefficient_matrix(const ProblemParams& params,
                                   const Eigen::VectorXd& grad);

// Worst-case elliptic Cordes margin over the coefficient family above:
//   sum a_ij^2 <= (sum a_ii)^2 / (n - 1 + delta).
// Admissible iff p < 3 + 2/(n-2) (always admissible when n = 2).
CordesMargin cordes_margin_elliptic(int n, double p);

// Parabolic variant: sum a_ij^2 + 1 <= (sum a_ii + 1)^2 / (n + delta).
// Admissible iff p < 3 + 2/(n-1).
CordesMargin cordes_margin_parabolic(int n, double p);

}  // namespace plap
