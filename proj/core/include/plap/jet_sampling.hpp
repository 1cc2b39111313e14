#pragma once

#include "plap/jet.hpp"

#include <cstdint>
#include <random>

namespace plap {

// Default seed for randomized checks; fixed so failures reproduce.
inline constexpr std::uint64_t kDefaultJetSeed = 0x9e3779b97f4a7c15ull;

// Deterministic generator of random jets with i.i.d. uniform entries in
// [-entry_range, entry_range). Uses mt19937_64 with an explicit bit-to-double
// mapping, so the stream is identical across platforms.
class JetSampler {
 public:
  JetSampler(int n, std::uint64_t seed = kDefaultJetSeed, double entry_range = 10.0);

  PointJet next();
  double uniform_signed();  // one draw in [-entry_range, entry_range)

 private:
  int n_;
  double range_;
  std::mt19937_64 rng_;
};

// Largest normalized slack observed over a batch of random jets.
struct InequalityCheck {
  double max_violation = 0.0;      // max (lhs - rhs)/scale, negative when strict
  double max_planar_residual = 0.0;  // max lhs/scale (meaningful for n = 2)
  double min_rhs = 0.0;            // min rhs/scale (Cauchy-Schwarz sanity)
  std::int64_t samples = 0;
};

InequalityCheck check_fundamental_inequality(int n, std::int64_t samples,
                                             std::uint64_t seed = kDefaultJetSeed,
                                             double entry_range = 10.0);

}  // namespace plap
