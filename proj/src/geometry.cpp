#include "geomed/geometry.hpp"

#include <cmath>
#include <limits>

namespace geomed {

namespace {

constexpr double kAntipodalGuard = 1e-9;

double sq(double x) { return x * x; }

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedManifolds: return "MismatchedManifolds";
    case ErrorCode::AntipodalPoints: return "AntipodalPoints";
    case ErrorCode::StepTooLongOnSphere: return "StepTooLongOnSphere";
    case ErrorCode::DegenerateVertex: return "DegenerateVertex";
    case ErrorCode::PointOutsideBall: return "PointOutsideBall";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SigmaNotBelowRho: return "SigmaNotBelowRho";
    case ErrorCode::InvalidMeasure: return "InvalidMeasure";
    case ErrorCode::ConditionStarFails: return "ConditionStarFails";
    case ErrorCode::DimensionTooLargeForOracle: return "DimensionTooLargeForOracle";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ScheduleViolatesBetaFloor: return "ScheduleViolatesBetaFloor";
    case ErrorCode::NonConformingSequence: return "NonConformingSequence";
    case ErrorCode::ZeroSubgradient: return "ZeroSubgradient";
    case ErrorCode::TauNonpositive: return "TauNonpositive";
    case ErrorCode::ScheduleMismatch: return "ScheduleMismatch";
    case ErrorCode::NonEuclidean: return "NonEuclidean";
    case ErrorCode::StuckOnAtom: return "StuckOnAtom";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Euclidean: return "euclidean";
    case Family::Sphere: return "sphere";
    case Family::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

ManifoldSpec ManifoldSpec::euclidean(int n) {
  ManifoldSpec m{Family::Euclidean, n, 0.0};
  m.validate();
  return m;
}

ManifoldSpec ManifoldSpec::sphere(int n, double kappa) {
  ManifoldSpec m{Family::Sphere, n, kappa};
  m.validate();
  return m;
}

ManifoldSpec ManifoldSpec::hyperbolic(int n, double kappa) {
  ManifoldSpec m{Family::Hyperbolic, n, kappa};
  m.validate();
  return m;
}

double ManifoldSpec::radius() const {
  return 1.0 / std::sqrt(std::abs(curvature));
}

void ManifoldSpec::validate() const {
  if (dimension < 1) fail(ErrorCode::InvalidBounds, "dimension must be >= 1");
  if (!std::isfinite(curvature))
    fail(ErrorCode::InvalidBounds, "curvature must be finite");
  switch (family) {
    case Family::Euclidean:
      if (curvature != 0.0)
        fail(ErrorCode::InvalidBounds, "euclidean requires curvature 0");
      break;
    case Family::Sphere:
      if (!(curvature > 0.0))
        fail(ErrorCode::InvalidBounds, "sphere requires curvature > 0");
      break;
    case Family::Hyperbolic:
      if (!(curvature < 0.0))
        fail(ErrorCode::InvalidBounds, "hyperbolic requires curvature < 0");
      break;
  }
}

double ambient_inner(const ManifoldSpec& m, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& v) {
  if (m.family == Family::Hyperbolic)
    return -u[0] * v[0] + u.tail(u.size() - 1).dot(v.tail(v.size() - 1));
  return u.dot(v);
}

double tangent_norm(const Tangent& v) {
  double s = ambient_inner(v.base.manifold, v.vec, v.vec);
  return s > 0.0 ? std::sqrt(s) : 0.0;
}

Eigen::VectorXd reproject(const ManifoldSpec& m, Eigen::VectorXd coords) {
  switch (m.family) {
    case Family::Euclidean:
      return coords;
    case Family::Sphere: {
      double n = coords.norm();
      if (n == 0.0) fail(ErrorCode::InvalidBounds, "zero vector is not on the sphere");
      coords *= m.radius() / n;
      return coords;
    }
    case Family::Hyperbolic: {
      double s = -ambient_inner(m, coords, coords);
      if (!(s > 0.0) || coords[0] <= 0.0)
        fail(ErrorCode::InvalidBounds, "coords not in the upper hyperboloid cone");
      coords *= m.radius() / std::sqrt(s);
      return coords;
    }
  }
  return coords;
}

double embedding_residual(const Point& x) {
  const ManifoldSpec& m = x.manifold;
  if (m.family == Family::Euclidean) return 0.0;
  double target = m.family == Family::Sphere ? sq(m.radius()) : -sq(m.radius());
  return std::abs(ambient_inner(m, x.coords, x.coords) - target);
}

Eigen::VectorXd project_to_tangent(const Point& x, Eigen::VectorXd v) {
  const ManifoldSpec& m = x.manifold;
  if (m.family == Family::Euclidean) return v;
  double xx = ambient_inner(m, x.coords, x.coords);
  double xv = ambient_inner(m, x.coords, v);
  v -= (xv / xx) * x.coords;
  return v;
}

Point make_point(const ManifoldSpec& m, Eigen::VectorXd coords) {
  m.validate();
  if (coords.size() != m.ambient_dim())
    fail(ErrorCode::InvalidBounds, "coordinate length does not match manifold");
  return Point{m, reproject(m, std::move(coords))};
}

Tangent make_tangent(const Point& base, Eigen::VectorXd vec) {
  if (vec.size() != base.manifold.ambient_dim())
    fail(ErrorCode::InvalidBounds, "tangent length does not match manifold");
  return Tangent{base, project_to_tangent(base, std::move(vec))};
}

namespace detail {

double chord_sq(const ManifoldSpec& m, const Eigen::VectorXd& x,
                const Eigen::VectorXd& y) {
  if (m.family == Family::Hyperbolic) {
    double s = -sq(x[0] - y[0]);
    for (int i = 1; i < x.size(); ++i) s += sq(x[i] - y[i]);
    return s;
  }
  return (x - y).squaredNorm();
}

void check_same_manifold(const Point& x, const Point& y) {
  if (!(x.manifold == y.manifold))
    fail(ErrorCode::MismatchedManifolds, "points live on different manifolds");
}

void exp_unit_into(const Point& x, const Eigen::VectorXd& u, double t,
                   Eigen::VectorXd& out) {
  const ManifoldSpec& m = x.manifold;
  switch (m.family) {
    case Family::Euclidean:
      out = x.coords;
      out.noalias() += t * u;
      return;
    case Family::Sphere: {
      const double R = m.radius();
      if (t >= M_PI * R)
        fail(ErrorCode::StepTooLongOnSphere,
             "step length reaches the antipode");
      double s = t / R;
      out = std::cos(s) * x.coords;
      out.noalias() += (R * std::sin(s)) * u;
      out *= R / out.norm();
      return;
    }
    case Family::Hyperbolic: {
      const double R = m.radius();
      double s = t / R;
      out = std::cosh(s) * x.coords;
      out.noalias() += (R * std::sinh(s)) * u;
      double nn = -ambient_inner(m, out, out);
      out *= R / std::sqrt(nn);
      return;
    }
  }
}

}  // namespace detail

double distance(const Point& x, const Point& y) {
  detail::check_same_manifold(x, y);
  const ManifoldSpec& m = x.manifold;
  switch (m.family) {
    case Family::Euclidean:
      return (x.coords - y.coords).norm();
    case Family::Sphere: {
      // exact chord-to-arc identity |x-y| = 2R sin(d / 2R); stable at d ~ 0
      const double R = m.radius();
      double chord = std::sqrt(detail::chord_sq(m, x.coords, y.coords));
      double ratio = std::min(1.0, chord / (2.0 * R));
      double d = 2.0 * R * std::asin(ratio);
      double pi_r = M_PI * R;
      if (d >= pi_r - kAntipodalGuard)
        fail(ErrorCode::AntipodalPoints, "sphere points are (nearly) antipodal");
      return d;
    }
    case Family::Hyperbolic: {
      const double R = m.radius();
      // cosh(d/R) = 1 + |x-y|_M^2 / (2R^2), evaluated via asinh-free log1p form
      double u = detail::chord_sq(m, x.coords, y.coords) / (2.0 * R * R);
      if (u < 0.0) u = 0.0;
      return R * std::log1p(u + std::sqrt(u * (u + 2.0)));
    }
  }
  return 0.0;
}

Point exp_map(const Tangent& v) {
  const ManifoldSpec& m = v.base.manifold;
  double len = tangent_norm(v);
  switch (m.family) {
    case Family::Euclidean:
      return Point{m, v.base.coords + v.vec};
    case Family::Sphere: {
      const double R = m.radius();
      if (len >= M_PI * R)
        fail(ErrorCode::StepTooLongOnSphere,
             "step length reaches the antipode");
      if (len == 0.0) return v.base;
      double s = len / R;
      Eigen::VectorXd c =
          std::cos(s) * v.base.coords + (R * std::sin(s) / len) * v.vec;
      return Point{m, reproject(m, std::move(c))};
    }
    case Family::Hyperbolic: {
      const double R = m.radius();
      if (len == 0.0) return v.base;
      double s = len / R;
      Eigen::VectorXd c =
          std::cosh(s) * v.base.coords + (R * std::sinh(s) / len) * v.vec;
      return Point{m, reproject(m, std::move(c))};
    }
  }
  return v.base;
}

Tangent log_map(const Point& x, const Point& p) {
  detail::check_same_manifold(x, p);
  const ManifoldSpec& m = x.manifold;
  switch (m.family) {
    case Family::Euclidean:
      return Tangent{x, p.coords - x.coords};
    case Family::Sphere: {
      const double R = m.radius();
      double d = distance(x, p);  // rejects antipodal pairs
      if (d == 0.0) return Tangent{x, Eigen::VectorXd::Zero(m.ambient_dim())};
      // u = (p - x) - (cos(theta) - 1) x is the tangential part of p - x
      double one_minus_cos =
          detail::chord_sq(m, x.coords, p.coords) / (2.0 * R * R);
      Eigen::VectorXd u = (p.coords - x.coords) + one_minus_cos * x.coords;
      double un = u.norm();
      if (un == 0.0) return Tangent{x, Eigen::VectorXd::Zero(m.ambient_dim())};
      return Tangent{x, (d / un) * u};
    }
    case Family::Hyperbolic: {
      const double R = m.radius();
      double d = distance(x, p);
      if (d == 0.0) return Tangent{x, Eigen::VectorXd::Zero(m.ambient_dim())};
      double cosh_minus_one =
          detail::chord_sq(m, x.coords, p.coords) / (2.0 * R * R);
      Eigen::VectorXd u = (p.coords - x.coords) - cosh_minus_one * x.coords;
      double s = ambient_inner(m, u, u);
      double un = s > 0.0 ? std::sqrt(s) : 0.0;
      if (un == 0.0) return Tangent{x, Eigen::VectorXd::Zero(m.ambient_dim())};
      return Tangent{x, (d / un) * u};
    }
  }
  return Tangent{x, Eigen::VectorXd::Zero(m.ambient_dim())};
}

Point geodesic_point(const Point& x, const Tangent& u, double t) {
  if (std::abs(tangent_norm(u) - 1.0) > 1e-10)
    fail(ErrorCode::OutOfRange, "direction must be a unit tangent");
  if (t == 0.0) return x;
  return exp_map(Tangent{x, t * u.vec});
}

double angle(const Point& x, const Point& p, const Point& q) {
  Tangent lp = log_map(x, p);
  Tangent lq = log_map(x, q);
  double np = tangent_norm(lp);
  double nq = tangent_norm(lq);
  if (np < 1e-15 || nq < 1e-15)
    fail(ErrorCode::DegenerateVertex, "angle vertex coincides with a side point");
  double c = ambient_inner(x.manifold, lp.vec, lq.vec) / (np * nq);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

double geodesic_line_distance(const Point& q, const Point& x,
                              const Tangent& u) {
  const ManifoldSpec& m = x.manifold;
  detail::check_same_manifold(q, x);
  double nu = tangent_norm(u);
  if (nu < 1e-15)
    fail(ErrorCode::OutOfRange, "geodesic direction must be nonzero");
  Eigen::VectorXd e1 = u.vec / nu;
  switch (m.family) {
    case Family::Euclidean: {
      Eigen::VectorXd w = q.coords - x.coords;
      double proj = w.dot(e1);
      double s = w.squaredNorm() - proj * proj;
      return s > 0.0 ? std::sqrt(s) : 0.0;
    }
    case Family::Sphere: {
      const double R = m.radius();
      Eigen::VectorXd e0 = x.coords / R;
      // perpendicular part of q w.r.t. the great-circle plane span{e0, e1}
      Eigen::VectorXd perp =
          q.coords - q.coords.dot(e0) * e0 - q.coords.dot(e1) * e1;
      double r = std::min(1.0, perp.norm() / R);
      return R * std::asin(r);
    }
    case Family::Hyperbolic: {
      const double R = m.radius();
      Eigen::VectorXd e0 = x.coords / R;  // <e0,e0>_M = -1
      double alpha = -ambient_inner(m, q.coords, e0);
      double beta = ambient_inner(m, q.coords, e1);
      double perp_sq = ambient_inner(m, q.coords, q.coords) + alpha * alpha -
                       beta * beta;  // = -R^2 + a^2 - b^2 >= 0
      if (perp_sq < 0.0) perp_sq = 0.0;
      return R * std::asinh(std::sqrt(perp_sq) / R);
    }
  }
  return 0.0;
}

double ball_exit_time(const Point& x, const Tangent& u, const Point& center,
                      double rho) {
  if (distance(x, center) > rho + 1e-9)
    fail(ErrorCode::PointOutsideBall, "geodesic start is outside the ball");
  const double hi_cap = 2.0 * rho;
  auto inside = [&](double t) {
    return distance(geodesic_point(x, u, t), center) <= rho;
  };
  if (inside(hi_cap)) return hi_cap;
  double lo = 0.0, hi = hi_cap;
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace geomed
