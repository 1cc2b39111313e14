#include "plap/jet_sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace plap {

JetSampler::JetSampler(int n, std::uint64_t seed, double entry_range)
    : n_(n), range_(entry_range), rng_(seed) {
  if (n < 1) throw std::invalid_argument("JetSampler: dimension must be >= 1");
  if (entry_range <= 0.0)
    throw std::invalid_argument("JetSampler: entry_range must be positive");
}

double JetSampler::uniform_signed() {
  const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;  // [0,1)
  return range_ * (2.0 * unit - 1.0);
}

PointJet JetSampler::next() {
  PointJet jet(n_);
  Eigen::VectorXd g(n_);
  for (int i = 0; i < n_; ++i) g[i] = uniform_signed();
  jet.set_grad(std::move(g));
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) jet.set_hess(i, j, uniform_signed());
  return jet;
}

InequalityCheck check_fundamental_inequality(int n, std::int64_t samples,
                                             std::uint64_t seed, double entry_range) {
  JetSampler sampler(n, seed, entry_range);
  InequalityCheck out;
  out.samples = samples;
  for (std::int64_t s = 0; s < samples; ++s) {
    const PointJet jet = sampler.next();
    const JetInvariants inv = invariants(jet);
    const InequalitySides sides = fundamental_residual(inv, n);
    const double scale = inequality_scale(inv);
    out.max_violation = std::max(out.max_violation, (sides.lhs_abs - sides.rhs) / scale);
    out.max_planar_residual = std::max(out.max_planar_residual, sides.lhs_abs / scale);
    out.min_rhs = std::min(out.min_rhs, sides.rhs / scale);
  }
  return out;
}

}  // namespace plap
