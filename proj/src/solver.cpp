#include "geomed/solver.hpp"

#include <cmath>

#include "geomed/oracles.hpp"

namespace geomed {

const char* schedule_kind_name(ScheduleKind k) {
  switch (k) {
    case ScheduleKind::beta_over_kplus1: return "beta_over_kplus1";
    case ScheduleKind::beta_times_ak: return "beta_times_ak";
    case ScheduleKind::full_rx_over_kplus1: return "full_rx_over_kplus1";
    case ScheduleKind::constant: return "constant";
  }
  return "?";
}

const char* terminal_status_name(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::characterization_met: return "characterization_met";
    case TerminalStatus::max_iters: return "max_iters";
    case TerminalStatus::stalled: return "stalled";
  }
  return "?";
}

double StepsizeSchedule::step(int k, double r_x) const {
  switch (kind) {
    case ScheduleKind::beta_over_kplus1:
      return beta / (k + 1);
    case ScheduleKind::beta_times_ak:
      return beta * std::pow(1.0 / (k + 1), ak_power);
    case ScheduleKind::full_rx_over_kplus1:
      return r_mult * r_x / (k + 1);
    case ScheduleKind::constant:
      return beta;
  }
  return beta;
}

StepsizeSchedule make_schedule(ScheduleKind kind, double beta,
                               const BallSpec& ball, double sigma,
                               double ak_power, double r_mult) {
  StepsizeSchedule s;
  s.kind = kind;
  switch (kind) {
    case ScheduleKind::beta_over_kplus1:
    case ScheduleKind::beta_times_ak: {
      if (kind == ScheduleKind::beta_times_ak) {
        // a_k = 1/(k+1)^p: sums diverge iff p <= 1, a_k -> 0 iff p > 0
        if (!(ak_power > 0.0))
          fail(ErrorCode::NonConformingSequence,
               "a_k does not tend to 0 (need p > 0)");
        if (ak_power > 1.0)
          fail(ErrorCode::NonConformingSequence,
               "sum a_k converges (need p <= 1)");
        s.ak_power = ak_power;
        s.square_summable = ak_power > 0.5;
      } else {
        s.ak_power = 1.0;
        s.square_summable = true;  // harmonic: sum 1/(k+1)^2 < inf
      }
      double floor = beta_floor(ball.bounds, sigma);
      if (beta <= 0.0) {
        s.beta = floor;
      } else if (beta > floor) {
        s.beta = floor;
        s.capped = true;
      } else {
        s.beta = beta;
      }
      break;
    }
    case ScheduleKind::full_rx_over_kplus1:
      if (!(r_mult > 0.0) || !(r_mult <= 1.0))
        fail(ErrorCode::InvalidConfig, "r_mult must lie in (0, 1]");
      s.r_mult = r_mult;
      s.square_summable = true;
      break;
    case ScheduleKind::constant:
      if (!(beta > 0.0))
        fail(ErrorCode::InvalidConfig, "constant step must be positive");
      s.beta = beta;
      s.square_summable = false;
      break;
  }
  return s;
}

StepsizeSchedule rate_schedule(double r) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidConfig, "rate parameter must be > 0");
  StepsizeSchedule s;
  s.kind = ScheduleKind::beta_over_kplus1;
  s.beta = r;
  s.ak_power = 1.0;
  s.square_summable = true;
  s.floor_exempt = true;
  return s;
}

std::vector<double> fundamental_inequality_probe(
    const Point& x_k, const Point& x_k1, double t_k, double h_norm,
    const std::vector<Point>& probes, const DiscreteMeasure& measure,
    const BallSpec& ball) {
  if (!(h_norm > 0.0))
    fail(ErrorCode::ZeroSubgradient, "probe requires |H(x_k)| > 0");
  const double C = c_constant(ball.bounds);
  const double f_xk = f_value(x_k, measure, ball);
  std::vector<double> slacks;
  slacks.reserve(probes.size());
  for (const Point& y : probes) {
    double lhs = distance(x_k1, y);
    double dky = distance(x_k, y);
    double rhs = dky * dky + C * t_k * t_k +
                 (2.0 * t_k / h_norm) * (f_value(y, measure, ball) - f_xk);
    slacks.push_back(rhs - lhs * lhs);
  }
  return slacks;
}

SolveResult solve(const DiscreteMeasure& measure, const BallSpec& ball,
                  const SolverConfig& config, std::optional<Point> x0) {
  require_valid(measure, ball);
  if (config.max_iters < 1 || !(config.stop_tol > 0.0))
    fail(ErrorCode::InvalidConfig, "need max_iters >= 1 and stop_tol > 0");

  const double sigma = support_radius(measure, ball);
  const double floor = beta_floor(ball.bounds, sigma);
  const StepsizeSchedule& sched = config.schedule;
  const bool beta_kind = sched.kind == ScheduleKind::beta_over_kplus1 ||
                         sched.kind == ScheduleKind::beta_times_ak;
  if (beta_kind && !sched.floor_exempt && sched.beta > floor * (1.0 + 1e-12))
    fail(ErrorCode::ScheduleViolatesBetaFloor,
         "beta exceeds the certified exit-time floor");

  Point x = [&] {
    if (x0) {
      if (distance(*x0, ball.center) > ball.rho + 1e-9)
        fail(ErrorCode::PointOutsideBall, "x0 must lie in the closed ball");
      return *x0;
    }
    int best = 0;
    for (int i = 1; i < static_cast<int>(measure.atoms.size()); ++i)
      if (measure.atoms[i].weight > measure.atoms[best].weight) best = i;
    return measure.atoms[best].point;
  }();

  // Fixed probe set for the per-iteration fundamental-inequality diagnostics.
  std::vector<Point> probes;
  if (config.record_diagnostics && config.diagnostic_probe_count > 0) {
    DeterministicRng rng(config.probe_seed);
    for (int i = 0; i < config.diagnostic_probe_count; ++i)
      probes.push_back(random_ball_point(rng, ball, ball.rho * 0.999));
  }

  SolveResult result{x, 0.0, 0.0, 0.0, {}};
  IterateTrace& trace = result.trace;
  trace.schedule = sched;
  if (config.record_trace) trace.records.reserve(config.max_iters / 64 + 16);

  Eigen::VectorXd h(x.manifold.ambient_dim());
  Eigen::VectorXd step_vec(x.manifold.ambient_dim());
  Eigen::VectorXd next_coords(x.manifold.ambient_dim());
  int stall_count = 0;
  trace.status = TerminalStatus::max_iters;

  auto finish = [&](TerminalStatus status, int iterations,
                    const ObjectiveEval& ev) {
    trace.status = status;
    trace.iterations = iterations;
    result.median = x;
    result.f = ev.f;
    result.h_norm = ev.h_norm;
    result.atom_weight = ev.atom_weight;
  };

  for (int k = 0;; ++k) {
    ObjectiveEval ev = eval_objective(x, measure, config.atom_tol, h);

    TraceRecord rec;
    if (config.record_trace) {
      rec.k = k;
      rec.x = x;
      rec.f = ev.f;
      rec.h_norm = ev.h_norm;
      rec.atom_weight = ev.atom_weight;
    }

    // Step 2: the characterization test |H| <= mu{x} (+ tolerance).
    if (ev.h_norm <= ev.atom_weight + config.stop_tol) {
      if (config.record_trace) trace.records.push_back(std::move(rec));
      finish(TerminalStatus::characterization_met, k, ev);
      return result;
    }
    if (k >= config.max_iters) {
      if (config.record_trace) trace.records.push_back(std::move(rec));
      finish(TerminalStatus::max_iters, k, ev);
      return result;
    }
    if (stall_count >= 50) {
      if (config.record_trace) trace.records.push_back(std::move(rec));
      finish(TerminalStatus::stalled, k, ev);
      return result;
    }

    // Step 3: move along -H/|H|. r_x is bisected exactly when diagnostics
    // demand it or the nominal step may exceed the certified floor.
    step_vec = h / (-ev.h_norm);
    double nominal = sched.step(k, 0.0);
    double r_x;
    if (config.record_diagnostics ||
        sched.kind == ScheduleKind::full_rx_over_kplus1 || nominal > floor) {
      r_x = ball_exit_time(x, Tangent{x, step_vec}, ball.center, ball.rho);
      if (sched.kind == ScheduleKind::full_rx_over_kplus1)
        nominal = sched.step(k, r_x);
    } else {
      r_x = floor;  // certified lower bound; t <= floor never clamps
    }
    double t = std::min(nominal, r_x);

    detail::exp_unit_into(x, step_vec, t, next_coords);

    if (config.record_trace) {
      rec.t = t;
      rec.r_x = r_x;
      if (!probes.empty()) {
        Point x_next{x.manifold, next_coords};
        rec.fundamental_slack = fundamental_inequality_probe(
            x, x_next, t, ev.h_norm, probes, measure, ball);
      }
      trace.records.push_back(std::move(rec));
    }
    trace.steps.push_back(t);

    // The step moves geodesic distance t exactly.
    stall_count = t < 1e-15 ? stall_count + 1 : 0;
    x.coords.swap(next_coords);
  }
}

}  // namespace geomed
