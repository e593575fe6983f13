#pragma once

#include <vector>

#include "geomed/solver.hpp"

namespace geomed {

/// A-priori squared-distance bounds b_N = (rho+sigma)^2,
/// b_{k+1} = (1 - 2 tau t_k) b_k + C t_k^2, evaluated both by the recursion
/// and by the explicit product form; the two routes must agree to 1e-12
/// relative at every index.
struct BoundSeries {
  int N = 0;                   // first index with 2 tau t_N < 1
  std::vector<double> b;       // b[i] is the bound at iteration N + i
  std::vector<double> b_product;  // independent product-form evaluation
  double tau = 0.0;
  double C = 0.0;
  double start = 0.0;          // (rho + sigma)^2
  std::vector<double> steps;   // t_k for k = 0..k_max-1 (nominal or realized)
  StepsizeSchedule schedule;

  double at(int k) const;  // bound at iteration k >= N
};

/// Builds the series from the schedule's nominal steps. The full_rx kind has
/// trajectory-dependent steps and is rejected here; feed realized steps
/// through bound_sequence_from_steps instead.
BoundSeries bound_sequence(double tau, const BallSpec& ball, double sigma,
                           const StepsizeSchedule& schedule, int k_max);

BoundSeries bound_sequence_from_steps(double tau, const BallSpec& ball,
                                      double sigma,
                                      std::vector<double> steps,
                                      const StepsizeSchedule& schedule);

/// Closed-form majorant of u_{k+1} for the recursion
/// u_{k+1} <= (1 - alpha/(k+1)) u_k + zeta/(k+1)^2, branching on alpha.
double rate_bound(double alpha, double zeta, double u0, int k);

/// Paper specialization: t_k = r/(k+1), alpha = 2 tau r, zeta = r^2 C,
/// u0 = (rho + sigma)^2. Returns the bound on d^2(x_{k+1}, m).
double median_rate_bound(double tau, double r, const BallSpec& ball,
                         double sigma, int k);

struct DominationViolation {
  int k = 0;
  double bound = 0.0;
  double realized = 0.0;
};

struct DominationReport {
  TauProvenance provenance = TauProvenance::user_supplied;
  bool certified = false;  // provenance == oracle_certified
  int checked = 0;
  double min_margin = 0.0;  // min over k of b_k - d^2(x_k, m_ref)
  std::vector<DominationViolation> violations;
};

/// Margins b_k - d^2(x_k, m_ref) for k >= N. A heuristic tau may legitimately
/// violate; an oracle-certified one must not.
DominationReport bound_domination_report(const BoundSeries& series,
                                         const IterateTrace& trace,
                                         const Point& m_ref,
                                         TauProvenance provenance);

/// Same check against a precomputed realized d^2 sequence (index = iteration).
DominationReport domination_check(const BoundSeries& series,
                                  const std::vector<double>& realized_d2,
                                  TauProvenance provenance);

}  // namespace geomed
