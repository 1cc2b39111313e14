#pragma once

#include "plap/constants.hpp"
#include "plap/grid.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace plap {

// Outcome of checking one estimate on one discrete field: both sides, the
// implied constant lhs/rhs_raw (rhs_raw carries no constant), and pass/fail
// against the recorded criterion.
struct EstimateReport {
  std::string name;
  std::string statement;  // human-readable form of the checked inequality

  int n = 0;
  double p = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double eps = 0.0;
  double h = 0.0;
  double dt = std::numeric_limits<double>::quiet_NaN();
  Region region;

  double lhs = 0.0;
  double rhs_raw = 0.0;
  double ratio = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;
  double tolerance = 0.0;  // cap or pointwise tolerance used for `pass`
  std::string notes;
};

// Discrete check of the identity
//   integral (|D^2f|^2 - (Delta f)^2) phi^2 = - integral (D^2f Df - Delta f Df) . D(phi^2)
// by summation by parts. lhs/rhs_raw are the two sides; notes carry the
// relative identity error. The cutoff must vanish on the invalid rim.
EstimateReport divergence_identity_report(const ScalarField& f, const ScalarField& cutoff,
                                          double rel_error_cap = 0.05);

// Second-order energy of the power-weighted gradient:
//   integral_B |D[(|Du|^2+eps)^{(p-gamma)/4} Du]|^2
//     <= C r^{-2} integral_2B (|Du|^2+eps)^{(p-gamma+2)/2}.
// Refuses gamma >= gamma_threshold(n,p).
EstimateReport power_gradient_energy_report(const ScalarField& u,
                                            const ProblemParams& params, double gamma,
                                            const Region& ball);

// Pointwise lower bound  |D^2u|^2 - (Delta u)^2 >= (1/K_{n,p}) |D^2u|^2.
// lhs = worst violation over the region, rhs_raw = tolerance C1 h + C2 eps;
// requires 1 < p < 3 + 2/(n-2).
EstimateReport hessian_sign_bound_report(const ScalarField& u,
                                         const ProblemParams& params,
                                         const Region& ball, double tol_c1 = 10.0,
                                         double tol_c2 = 10.0);

// Planar quasiregularity bound |D^2u|^2 <= -((p-1)^2+1)/(p-1) det D^2u
// (n = 2 only), same violation/tolerance convention.
EstimateReport quasiregularity_report(const ScalarField& u, const ProblemParams& params,
                                      const Region& ball, double tol_c1 = 10.0,
                                      double tol_c2 = 10.0);

// Cutoff-weighted energy bound
//   integral [ |D^2u Du|^2/(|Du|^2+eps) + (Delta u)^2 ] (|Du|^2+eps)^{(p-gamma)/2} phi^2
//     <= C integral (|Du|^2+eps)^{(p-gamma+2)/2} |Dphi|^2.
// Refuses gamma >= gamma_threshold(n,p); requires eps > 0.
EstimateReport weighted_energy_report(const ScalarField& u, const ProblemParams& params,
                                      double gamma, const ScalarField& cutoff);

// Space-time energy bounds on a cylinder pair Q_r within Q_2r.
enum class ParabolicEstimate {
  SecondOrderNormalized,  // int (u_t^2 + |D^2u|^2) <= C r^-2 int |Du|^2,  p < 3+2/(n-2)
  TimeDerivative,         // int u_t^2 <= C r^-2 int (|Du|^p + |Du|^{2p-2})
  SecondOrderDivergence,  // int |D^2u|^2 <= C r^-2 int (|Du|^2 + |Du|^{4-p}),  1 < p < 3
};

EstimateReport parabolic_energy_report(const SpaceTimeField& u,
                                       const ProblemParams& params,
                                       ParabolicEstimate estimate,
                                       const Region& cylinder);

// Integral table of |D^2 w_h|^2 over a fixed cylinder straddling the line
// {x_1 = 0}, for the exact sharpness solution w discretized at each spacing.
// For p in (2,3) the column converges; at p = 3 it grows like log(1/h);
// for p > 3 it grows like h^{-(p-3)/(p-1)}.
struct SharpnessScan {
  struct Level {
    double h = 0.0;
    double value = 0.0;
  };
  double p = 0.0;
  std::vector<Level> levels;
  std::string classification;     // "convergent" | "log-divergent" | "divergent"
  double last_rel_increment = 0.0;  // |S_m - S_{m-1}| / |S_m|
  double fitted_log_coefficient = 0.0;  // increments ~ c log 2 (log case)
  double fitted_rate = 0.0;       // log2 of the last increment ratio
};

// Spacings must divide 0.5 so the scan grids keep x_1 = 0 as a grid point.
SharpnessScan sharpness_scan(double p, const std::vector<double>& spacings);
std::vector<double> dyadic_spacings(double h0, int levels);

// Pointwise probe of |D^2w|^2 - (Delta w)^2 for the explicit cusp function
// w = 2^{1/3} x_1^{4/3} - x_2^{4/3} - x_3^{4/3} on (0, inf)^3: the closed
// form (32/81)[ 2^{1/3} x_1^{-2/3}(x_2^{-2/3}+x_3^{-2/3}) - x_2^{-2/3} x_3^{-2/3} ]
// is positive near x_1 = 0 and changes sign as x_1 grows.
double cusp_example(const std::array<double, 3>& x);
double cusp_hessian_gap(const std::array<double, 3>& x);

struct SignProbeResult {
  std::array<double, 3> x;
  double analytic = 0.0;
  double discrete = 0.0;
};

// Evaluates the closed form at each point (all coordinates must be positive)
// and cross-checks it against the discrete |D^2w_h|^2 - (Delta_h w)^2 on a
// local grid of spacing h.
std::vector<SignProbeResult> sign_change_probe(
    const std::vector<std::array<double, 3>>& points, double h = 1e-2);

// Ratio-boundedness study: runs `make(h)` over dyadic spacings and passes
// when the finest ratio is at most `cap` times the coarsest.
struct RefinementStudy {
  std::vector<EstimateReport> levels;
  double cap = 2.0;
  bool pass = false;
};

RefinementStudy ratio_boundedness_study(
    const std::function<EstimateReport(double)>& make, const std::vector<double>& spacings,
    double cap = 2.0);

}  // namespace plap
