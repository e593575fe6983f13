#include "geomed/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geomed {

double BoundSeries::at(int k) const {
  if (k < N || k - N >= static_cast<int>(b.size()))
    fail(ErrorCode::OutOfRange, "bound index outside the computed range");
  return b[k - N];
}

namespace {

BoundSeries build_series(double tau, const BallSpec& ball, double sigma,
                         std::vector<double> steps,
                         const StepsizeSchedule& schedule) {
  if (!(tau > 0.0)) fail(ErrorCode::TauNonpositive, "tau must be positive");
  if (!(sigma >= 0.0) || !(sigma < ball.rho))
    fail(ErrorCode::SigmaNotBelowRho, "sigma must lie in [0, rho)");

  BoundSeries s;
  s.tau = tau;
  s.C = c_constant(ball.bounds);
  s.start = (ball.rho + sigma) * (ball.rho + sigma);
  s.schedule = schedule;

  int N = 0;
  while (N < static_cast<int>(steps.size()) && 2.0 * tau * steps[N] >= 1.0)
    ++N;
  if (N == static_cast<int>(steps.size()))
    fail(ErrorCode::OutOfRange,
         "no admissible start index: 2 tau t_k >= 1 throughout");
  s.N = N;

  const int len = static_cast<int>(steps.size()) - N + 1;
  s.b.resize(len);
  s.b_product.resize(len);
  s.b[0] = s.start;
  s.b_product[0] = s.start;

  // Product-form state: b_{k+1} = start * P_k + C * S_k with
  // P_k = prod_{i=N..k} (1 - 2 tau t_i) tracked in log space against
  // underflow, S_k = (1 - 2 tau t_k) S_{k-1} + t_k^2.
  double P = 1.0, logP = 0.0, S = 0.0;
  bool underflowed = false;
  for (int i = 0; i + 1 < len; ++i) {
    double t = steps[N + i];
    double factor = 1.0 - 2.0 * tau * t;
    s.b[i + 1] = factor * s.b[i] + s.C * t * t;

    logP += std::log1p(-2.0 * tau * t);
    if (!underflowed) {
      P *= factor;
      if (P != 0.0 && P < 1e-280) underflowed = true;
    }
    if (underflowed) P = std::exp(logP);
    S = factor * S + t * t;
    s.b_product[i + 1] = s.start * P + s.C * S;
  }
  s.steps = std::move(steps);
  return s;
}

}  // namespace

BoundSeries bound_sequence(double tau, const BallSpec& ball, double sigma,
                           const StepsizeSchedule& schedule, int k_max) {
  if (schedule.kind == ScheduleKind::full_rx_over_kplus1)
    fail(ErrorCode::InvalidConfig,
         "full_rx steps are trajectory-dependent; use realized steps");
  if (k_max < 1) fail(ErrorCode::OutOfRange, "k_max must be >= 1");
  std::vector<double> steps(k_max);
  for (int k = 0; k < k_max; ++k) steps[k] = schedule.step(k, 0.0);
  return build_series(tau, ball, sigma, std::move(steps), schedule);
}

BoundSeries bound_sequence_from_steps(double tau, const BallSpec& ball,
                                      double sigma, std::vector<double> steps,
                                      const StepsizeSchedule& schedule) {
  if (steps.empty()) fail(ErrorCode::OutOfRange, "need at least one step");
  return build_series(tau, ball, sigma, std::move(steps), schedule);
}

double rate_bound(double alpha, double zeta, double u0, int k) {
  if (!(alpha > 0.0) || !(zeta > 0.0) || !(u0 >= 0.0) || k < 0)
    fail(ErrorCode::OutOfRange, "need alpha > 0, zeta > 0, u0 >= 0, k >= 0");
  if (alpha < 1.0) {
    return (u0 + std::pow(2.0, alpha) * zeta * (2.0 - alpha) / (1.0 - alpha)) /
           std::pow(k + 2.0, alpha);
  }
  if (alpha == 1.0) {
    return zeta * (1.0 + std::log(k + 1.0)) / (k + 1.0);
  }
  // alpha > 1: evaluate via expm1 so the formula stays finite-precision
  // stable as alpha -> 1+ where the plain form cancels catastrophically.
  double L = std::log(k + 2.0);
  double B = std::exp((1.0 - alpha) * L);          // (k+2)^{1-alpha}
  double A = -std::expm1((1.0 - alpha) * L) / (alpha - 1.0);
  return (zeta * A + u0 * B) / (k + 2.0);
}

double median_rate_bound(double tau, double r, const BallSpec& ball,
                         double sigma, int k) {
  if (!(tau > 0.0)) fail(ErrorCode::TauNonpositive, "tau must be positive");
  if (!(r > 0.0)) fail(ErrorCode::OutOfRange, "r must be positive");
  double alpha = 2.0 * tau * r;
  double zeta = r * r * c_constant(ball.bounds);
  double u0 = (ball.rho + sigma) * (ball.rho + sigma);
  return rate_bound(alpha, zeta, u0, k);
}

DominationReport domination_check(const BoundSeries& series,
                                  const std::vector<double>& realized_d2,
                                  TauProvenance provenance) {
  DominationReport rep;
  rep.provenance = provenance;
  rep.certified = provenance == TauProvenance::oracle_certified;
  rep.min_margin = std::numeric_limits<double>::infinity();
  const int last = std::min(static_cast<int>(realized_d2.size()) - 1,
                            series.N + static_cast<int>(series.b.size()) - 1);
  for (int k = series.N; k <= last; ++k) {
    double margin = series.at(k) - realized_d2[k];
    rep.min_margin = std::min(rep.min_margin, margin);
    if (margin < 0.0) rep.violations.push_back({k, series.at(k), realized_d2[k]});
    ++rep.checked;
  }
  return rep;
}

DominationReport bound_domination_report(const BoundSeries& series,
                                         const IterateTrace& trace,
                                         const Point& m_ref,
                                         TauProvenance provenance) {
  if (trace.records.empty())
    fail(ErrorCode::InvalidConfig, "trace carries no records");
  // The series must have been built on this trace's realized steps.
  const std::size_t n = std::min(series.steps.size(), trace.steps.size());
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(series.steps[k] - trace.steps[k]) >
        1e-15 * std::max(1.0, std::abs(trace.steps[k])))
      fail(ErrorCode::ScheduleMismatch,
           "bound series and trace disagree on t_" + std::to_string(k));
  std::vector<double> d2(trace.records.size());
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    double d = distance(trace.records[i].x, m_ref);
    d2[i] = d * d;
  }
  return domination_check(series, d2, provenance);
}

}  // namespace geomed
