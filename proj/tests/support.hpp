#pragma once

#include <cmath>
#include <vector>

#include "geomed/measure.hpp"
#include "geomed/oracles.hpp"

// Test-only helpers: closed-form oracles and finite-difference machinery.
// These stay independent of the bisection / summation paths they check.

namespace testsupport {

using namespace geomed;

inline ManifoldSpec plane() { return ManifoldSpec::euclidean(2); }
inline ManifoldSpec sphere2() { return ManifoldSpec::sphere(2, 1.0); }
inline ManifoldSpec hyper2() { return ManifoldSpec::hyperbolic(2, -1.0); }

inline Point pt(const ManifoldSpec& m, std::initializer_list<double> c) {
  Eigen::VectorXd v(static_cast<int>(c.size()));
  int i = 0;
  for (double x : c) v[i++] = x;
  return make_point(m, std::move(v));
}

inline Point origin_of(const ManifoldSpec& m) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m.ambient_dim());
  if (m.family != Family::Euclidean) c[0] = m.radius();
  return make_point(m, std::move(c));
}

inline BallSpec standard_ball(const ManifoldSpec& m) {
  double rho = m.family == Family::Sphere ? M_PI / 8.5 : 1.0;
  return make_ball(origin_of(m), rho);
}

// Closed-form exit time of gamma_x(t) from B(center, rho) via the model-space
// law of cosines; the production path uses bisection, this is the oracle.
inline double exit_time_closed_form(const Point& x, const Tangent& u,
                                    const Point& center, double rho) {
  double D = distance(x, center);
  if (D == 0.0) return rho;
  // theta = angle at x between u and the direction to the center
  const ManifoldSpec& m = x.manifold;
  Tangent to_center = log_map(x, center);
  double cos_theta = ambient_inner(m, u.vec, to_center.vec) /
                     (tangent_norm(u) * tangent_norm(to_center));
  switch (m.family) {
    case Family::Euclidean: {
      // |x + t u - a|^2 = rho^2 with <u, a - x> = D cos(theta)
      double b = D * cos_theta;
      return b + std::sqrt(std::max(0.0, b * b - D * D + rho * rho));
    }
    case Family::Sphere: {
      double sk = std::sqrt(m.curvature);
      double A = std::cos(sk * D), B = std::sin(sk * D) * cos_theta;
      double M = std::hypot(A, B), phi = std::atan2(B, A);
      double val = std::cos(sk * rho) / M;
      if (val > 1.0) val = 1.0;
      if (val < -1.0) val = -1.0;
      return (phi + std::acos(val)) / sk;
    }
    case Family::Hyperbolic: {
      double sk = std::sqrt(-m.curvature);
      double A = std::cosh(sk * D), B = std::sinh(sk * D) * cos_theta;
      double disc = A * A - B * B;  // >= 1
      double arg = std::cosh(sk * rho) / std::sqrt(disc);
      if (arg < 1.0) arg = 1.0;
      return (std::atanh(B / A) + std::acosh(arg)) / sk;
    }
  }
  return 0.0;
}

// Centered second difference of g at 0 with stencil h.
template <typename G>
double second_difference(G&& g, double h) {
  return (g(h) - 2.0 * g(0.0) + g(-h)) / (h * h);
}

// Geodesic through two points as (base, unit direction, length).
struct GeodesicSegment {
  Point base;
  Tangent unit;
  double length = 0.0;
};

inline GeodesicSegment segment_between(const Point& a, const Point& b) {
  Tangent l = log_map(a, b);
  double len = tangent_norm(l);
  return {a, make_tangent(a, l.vec / len), len};
}

// Orthonormal tangent pair at x (deterministic), for right-angle setups.
inline std::pair<Tangent, Tangent> orthonormal_pair(const Point& x) {
  const ManifoldSpec& m = x.manifold;
  std::vector<Eigen::VectorXd> basis;
  for (int i = 0; i < m.ambient_dim() && basis.size() < 2; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m.ambient_dim());
    e[i] = 1.0;
    e = project_to_tangent(x, e);
    for (const auto& bb : basis) e -= ambient_inner(m, e, bb) * bb;
    double nn = ambient_inner(m, e, e);
    if (nn > 1e-12) basis.push_back(e / std::sqrt(nn));
  }
  return {make_tangent(x, basis[0]), make_tangent(x, basis[1])};
}

// --- comparison-geometry realization checks (shared with the acceptance
// suite, which runs them at full count) -----------------------------------

struct HessianCheckResult {
  double min_lower_slack = 1e300;  // FD(d_p) - D |gdot_nor|^2
  double min_upper_slack = 1e300;  // C |gdot|^2 - FD(d_p^2 / 2)
};

// Finite-difference realization of the two Hessian comparison bounds along
// random geodesics, h = 1e-4. Configurations too close to p are rejected:
// the fourth derivative of d_p grows like (d sin(theta))^-3 and would drown
// the stencil, so "geodesics avoiding p" means d >= 0.4 rho, sin(theta) >= 0.5.
inline HessianCheckResult hessian_bounds_check(const ManifoldSpec& m,
                                               std::uint64_t seed,
                                               int trials) {
  BallSpec ball = standard_ball(m);
  double D = d_constant(ball.bounds);
  double C = c_constant(ball.bounds);
  DeterministicRng rng(seed);
  HessianCheckResult res;
  const double h = 1e-4;
  int done = 0;
  while (done < trials) {
    Point p = random_ball_point(rng, ball, 0.8 * ball.rho);
    Point x = random_ball_point(rng, ball, 0.7 * ball.rho);
    Tangent u = random_unit_tangent(rng, x);
    if (distance(x, p) < 0.4 * ball.rho) continue;
    auto gamma = [&](double t) { return geodesic_point(x, u, t); };
    double theta = angle(x, p, gamma(0.05 * ball.rho));
    double sin_theta = std::sin(theta);
    if (sin_theta < 0.5) continue;
    double fd_d = second_difference(
        [&](double t) { return distance(gamma(t), p); }, h);
    double fd_half_d2 = second_difference(
        [&](double t) {
          double d = distance(gamma(t), p);
          return 0.5 * d * d;
        },
        h);
    res.min_lower_slack =
        std::min(res.min_lower_slack, fd_d - D * sin_theta * sin_theta);
    res.min_upper_slack = std::min(res.min_upper_slack, C - fd_half_d2);
    ++done;
  }
  return res;
}

// sin(angle C) >= L(rho, delta) d(A, B) on right triangles with the right
// angle constructed exactly at A.
inline double sin_angle_bound_min_slack(const ManifoldSpec& m,
                                        std::uint64_t seed, int trials) {
  BallSpec ball = standard_ball(m);
  double L = l_constant(ball.bounds);
  DeterministicRng rng(seed);
  double min_slack = 1e300;
  for (int i = 0; i < trials; ++i) {
    Point A = random_ball_point(rng, ball, 0.3 * ball.rho);
    auto [u, v] = orthonormal_pair(A);
    double c = rng.uniform(0.01, 0.6) * ball.rho;  // leg toward B
    double b = rng.uniform(0.01, 0.6) * ball.rho;  // leg toward C
    Point B = exp_map(Tangent{A, c * u.vec});
    Point C = exp_map(Tangent{A, b * v.vec});
    double slack = std::sin(angle(C, A, B)) - L * distance(A, B);
    min_slack = std::min(min_slack, slack);
  }
  return min_slack;
}

}  // namespace testsupport
