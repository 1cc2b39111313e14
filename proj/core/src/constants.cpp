#include "plap/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace plap {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::domain_error(what);
}

// Cordes margins over the coefficient family A(s) = I + (p-2) s e x e with
// s = |g|^2/(|g|^2+eps) in [0,1). The margin is monotone in s for p > 2, so
// the s -> 1 endpoint is the worst case there; for p < 2 both endpoints are
// evaluated and the smaller margin returned.
double elliptic_margin_at(int n, double p, double s) {
  const double t = (p - 2.0) * s;
  const double sum_sq = (n - 1.0) + (1.0 + t) * (1.0 + t);
  const double trace = n + t;
  return trace * trace / sum_sq - (n - 1.0);
}

double parabolic_margin_at(int n, double p, double s) {
  const double t = (p - 2.0) * s;
  const double sum_sq = (n - 1.0) + (1.0 + t) * (1.0 + t) + 1.0;
  const double trace = n + t + 1.0;
  return trace * trace / sum_sq - static_cast<double>(n);
}

}  // namespace

ProblemParams::ProblemParams(int n_, double p_, double eps_)
    : n(n_), p(p_), eps(eps_) {
  require(n >= 1, "ProblemParams: n must be >= 1");
  require(p > 1.0, "ProblemParams: p must be > 1");
  require(eps >= 0.0, "ProblemParams: eps must be >= 0");
}

double gamma_threshold(int n, double p) {
  require(n >= 2, "gamma_threshold: requires n >= 2");
  require(p > 1.0, "gamma_threshold: requires p > 1");
  const double d = n - 1.0;
  return std::min(p + n / d, 3.0 + (p - 1.0) / d);
}

double w22_exponent_bound(int n) {
  if (n <= 2) return std::numeric_limits<double>::infinity();
  return 3.0 + 2.0 / (n - 2.0);
}

double parabolic_w22_exponent_bound(int n) {
  if (n <= 1) return std::numeric_limits<double>::infinity();
  return 3.0 + 2.0 / (n - 1.0);
}

double k_constant(int n, double p) {
  require(n >= 2, "k_constant: requires n >= 2");
  require(p > 1.0 && p < w22_exponent_bound(n),
          "k_constant: requires 1 < p < 3 + 2/(n-2)");
  const double q = p - 1.0;
  const double denom = q * (n - (n - 2.0) * (p - 2.0));
  require(denom > 0.0, "k_constant: denominator must be positive");
  return (q * q + n - 1.0) / denom;
}

double c_coefficient(int n, double p, double gamma) {
  require(n >= 2, "c_coefficient: requires n >= 2");
  require(p > 1.0, "c_coefficient: requires p > 1");
  require(p != 2.0, "c_coefficient: undefined at p = 2");
  const double bracket = (n - 1.0) * (p - gamma) - (n - 2.0) * (p - 2.0) + n;
  return (p - 1.0) / (2.0 * (p - 2.0) * (p - 2.0)) * bracket;
}

Eigen::MatrixXd coefficient_matrix(const ProblemParams& params,
                                   const Eigen::VectorXd& grad) {
  require(grad.size() == params.n, "coefficient_matrix: gradient dimension mismatch");
  const double g2 = grad.squaredNorm();
  require(params.eps > 0.0 || g2 > 0.0,
          "coefficient_matrix: requires eps > 0 or a nonzero gradient");
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(params.n, params.n);
  a += (params.p - 2.0) / (g2 + params.eps) * (grad * grad.transpose());
  return a;
}

CordesMargin cordes_margin_elliptic(int n, double p) {
  require(n >= 2, "cordes_margin_elliptic: requires n >= 2");
  require(p > 1.0, "cordes_margin_elliptic: requires p > 1");
  double delta = elliptic_margin_at(n, p, 1.0);
  if (p < 2.0) delta = std::min(delta, elliptic_margin_at(n, p, 0.0));
  return {delta, delta > 0.0};
}

CordesMargin cordes_margin_parabolic(int n, double p) {
  require(n >= 2, "cordes_margin_parabolic: requires n >= 2");
  require(p > 1.0, "cordes_margin_parabolic: requires p > 1");
  double delta = parabolic_margin_at(n, p, 1.0);
  if (p < 2.0) delta = std::min(delta, parabolic_margin_at(n, p, 0.0));
  return {delta, delta > 0.0};
}

}  // namespace plap
