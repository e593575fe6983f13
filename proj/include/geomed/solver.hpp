#pragma once

#include <optional>
#include <vector>

#include "geomed/objective.hpp"

namespace geomed {

enum class ScheduleKind {
  beta_over_kplus1,   // t_k = beta / (k+1)
  beta_times_ak,      // t_k = beta * a_k for a built-in a_k family
  full_rx_over_kplus1,  // t_k = r_mult * r_{x_k} / (k+1)
  constant,           // t_k = beta (no convergence guarantee)
};

const char* schedule_kind_name(ScheduleKind k);

/// Built-in a_k families: a_k = 1/(k+1)^p with p in (0, 1]. p = 1 is the
/// harmonic sequence; p > 1/2 is additionally square-summable, which upgrades
/// convergence from set-distance to pointwise.
struct StepsizeSchedule {
  ScheduleKind kind = ScheduleKind::beta_over_kplus1;
  double beta = 0.0;
  double ak_power = 1.0;
  double r_mult = 1.0;
  bool square_summable = false;
  bool capped = false;        // beta was reduced to the floor by make_schedule
  bool floor_exempt = false;  // rate-experiment schedule; steps rely on clamping

  /// Nominal step at iteration k (full_rx kind needs the realized r_x).
  double step(int k, double r_x) const;
};

/// Validates the a_k conditions symbolically and enforces the beta floor
/// (requested beta above the floor is capped). beta <= 0 means "use the floor".
StepsizeSchedule make_schedule(ScheduleKind kind, double beta,
                               const BallSpec& ball, double sigma,
                               double ak_power = 1.0, double r_mult = 1.0);

/// Harmonic schedule t_k = r/(k+1) with r unconstrained by the beta floor,
/// for rate experiments; every realized step is still clamped to r_{x_k}.
StepsizeSchedule rate_schedule(double r);

struct SolverConfig {
  StepsizeSchedule schedule;
  double stop_tol = 1e-7;
  int max_iters = 100000;
  double atom_tol = kDefaultAtomTol;
  bool record_trace = true;
  bool record_diagnostics = false;  // exact r_x per step + slack probes
  int diagnostic_probe_count = 0;
  std::uint64_t probe_seed = 20250810;
};

enum class TerminalStatus { characterization_met, max_iters, stalled };

const char* terminal_status_name(TerminalStatus s);

struct TraceRecord {
  int k = 0;
  Point x;
  double f = 0.0;
  double h_norm = 0.0;
  double atom_weight = 0.0;
  double t = 0.0;    // 0 on the terminal record
  double r_x = 0.0;  // exact with diagnostics on, else the uniform floor
  std::vector<double> fundamental_slack;  // one entry per probe when recorded
};

struct IterateTrace {
  std::vector<TraceRecord> records;
  TerminalStatus status = TerminalStatus::max_iters;
  int iterations = 0;  // number of steps taken
  std::vector<double> steps;  // realized t_k, k = 0..iterations-1
  StepsizeSchedule schedule;
};

struct SolveResult {
  Point median;
  double f = 0.0;
  double h_norm = 0.0;
  double atom_weight = 0.0;
  IterateTrace trace;
};

/// Algorithm: stop at x_k when |H(x_k)| <= mu{x_k} + stop_tol, else move
/// distance t_k along -H(x_k)/|H(x_k)|, t_k clamped to the ball exit time.
/// Default start is the atom of largest weight (ties by index).
SolveResult solve(const DiscreteMeasure& measure, const BallSpec& ball,
                  const SolverConfig& config,
                  std::optional<Point> x0 = std::nullopt);

/// Slack of d^2(x_{k+1}, y) <= d^2(x_k, y) + C t^2 + (2t/|H|)(f(y) - f(x_k))
/// for each probe y; nonnegative up to rounding for a correct implementation.
std::vector<double> fundamental_inequality_probe(
    const Point& x_k, const Point& x_k1, double t_k, double h_norm,
    const std::vector<Point>& probes, const DiscreteMeasure& measure,
    const BallSpec& ball);

}  // namespace geomed
