#include "geomed/objective.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace geomed {

namespace {

void check_in_ball(const Point& x, const BallSpec& ball) {
  if (distance(x, ball.center) > ball.rho + 1e-9)
    fail(ErrorCode::PointOutsideBall, "evaluation point is outside the ball");
}

// Accumulates w * (-log_x(p) / d) into h without allocating: the log vector
// is formed from (p - x) and the chord correction term in place.
void accumulate_direction(const Point& x, const Point& p, double w, double d,
                          Eigen::VectorXd& h) {
  const ManifoldSpec& m = x.manifold;
  switch (m.family) {
    case Family::Euclidean:
      h.noalias() -= (w / d) * (p.coords - x.coords);
      return;
    case Family::Sphere: {
      const double R = m.radius();
      double one_minus_cos =
          detail::chord_sq(m, x.coords, p.coords) / (2.0 * R * R);
      // u = (p - x) + (1 - cos) x has |u| = R sin(d/R); scale to unit.
      double un = R * std::sin(d / R);
      if (un <= 0.0) return;
      double s = w / un;
      h.noalias() -= s * (p.coords - x.coords);
      h.noalias() -= (s * one_minus_cos) * x.coords;
      return;
    }
    case Family::Hyperbolic: {
      const double R = m.radius();
      double cosh_minus_one =
          detail::chord_sq(m, x.coords, p.coords) / (2.0 * R * R);
      double un = R * std::sinh(d / R);
      if (un <= 0.0) return;
      double s = w / un;
      h.noalias() -= s * (p.coords - x.coords);
      h.noalias() += (s * cosh_minus_one) * x.coords;
      return;
    }
  }
}

}  // namespace

ObjectiveEval eval_objective(const Point& x, const DiscreteMeasure& measure,
                             double atom_tol, Eigen::VectorXd& h_out,
                             bool compensated) {
  ObjectiveEval out;
  h_out.setZero();
  double f = 0.0, comp = 0.0;
  for (const Atom& a : measure.atoms) {
    double d = distance(x, a.point);
    if (compensated) {
      double y = a.weight * d - comp;
      double t = f + y;
      comp = (t - f) - y;
      f = t;
    } else {
      f += a.weight * d;
    }
    if (d <= atom_tol) {
      out.atom_weight += a.weight;
    } else {
      accumulate_direction(x, a.point, a.weight, d, h_out);
    }
  }
  out.f = f;
  double hs = ambient_inner(x.manifold, h_out, h_out);
  out.h_norm = hs > 0.0 ? std::sqrt(hs) : 0.0;
  return out;
}

double f_value(const Point& x, const DiscreteMeasure& measure,
               const BallSpec& ball, bool compensated) {
  check_in_ball(x, ball);
  double f = 0.0, comp = 0.0;
  for (const Atom& a : measure.atoms) {
    double term = a.weight * distance(x, a.point);
    if (compensated) {
      double y = term - comp;
      double t = f + y;
      comp = (t - f) - y;
      f = t;
    } else {
      f += term;
    }
  }
  return f;
}

SubgradientVector h_field(const Point& x, const DiscreteMeasure& measure,
                          const BallSpec& ball, double atom_tol) {
  check_in_ball(x, ball);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(x.manifold.ambient_dim());
  ObjectiveEval ev = eval_objective(x, measure, atom_tol, h);
  SubgradientVector out;
  out.h = Tangent{x, std::move(h)};
  out.norm = ev.h_norm;
  out.atom_weight_at_x = ev.atom_weight;
  return out;
}

double directional_derivative(const Point& x, const Tangent& u,
                              const DiscreteMeasure& measure,
                              const BallSpec& ball, Side side,
                              double atom_tol) {
  if (std::abs(tangent_norm(u) - 1.0) > 1e-10)
    fail(ErrorCode::OutOfRange, "direction must be a unit tangent");
  SubgradientVector sg = h_field(x, measure, ball, atom_tol);
  double inner = ambient_inner(x.manifold, u.vec, sg.h.vec);
  return side == Side::plus ? inner + sg.atom_weight_at_x
                            : inner - sg.atom_weight_at_x;
}

MedianCertificate is_median(const Point& x, const DiscreteMeasure& measure,
                            const BallSpec& ball, double tol,
                            double atom_tol) {
  SubgradientVector sg = h_field(x, measure, ball, atom_tol);
  MedianCertificate cert;
  cert.h_norm = sg.norm;
  cert.atom_weight = sg.atom_weight_at_x;
  cert.tol = tol;
  cert.is_median = sg.norm <= sg.atom_weight_at_x + tol;
  return cert;
}

namespace {

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
              const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew monotone chain; returns the hull counter-clockwise.
std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) { return a == b; }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  std::vector<Eigen::Vector2d> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Signed membership margin: >= -tol means x is in (or on) the hull.
bool hull_contains_2d(const Eigen::Vector2d& x,
                      const std::vector<Eigen::Vector2d>& pts, double tol) {
  std::vector<Eigen::Vector2d> hull = convex_hull_2d(pts);
  if (hull.size() == 1) return (x - hull[0]).norm() <= tol;
  if (hull.size() == 2) {
    Eigen::Vector2d d = hull[1] - hull[0];
    double t = std::clamp((x - hull[0]).dot(d) / d.squaredNorm(), 0.0, 1.0);
    return (x - (hull[0] + t * d)).norm() <= tol;
  }
  const int m = static_cast<int>(hull.size());
  for (int i = 0; i < m; ++i) {
    const Eigen::Vector2d& a = hull[i];
    const Eigen::Vector2d& b = hull[(i + 1) % m];
    double edge = (b - a).norm();
    if (cross2(a, b, x) < -tol * std::max(edge, 1e-30)) return false;
  }
  return true;
}

}  // namespace

bool location_check(const Point& x, const DiscreteMeasure& measure,
                    const BallSpec& ball, double tol) {
  double sigma = support_radius(measure, ball);
  if (distance(x, ball.center) > sigma + tol) return false;
  // Exact hull membership is implemented for the planar Euclidean case the
  // oracles exercise; elsewhere the sigma-ball necessary condition stands.
  if (x.manifold.family == Family::Euclidean && x.manifold.dimension == 2) {
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(measure.atoms.size());
    for (const auto& a : measure.atoms)
      pts.emplace_back(a.point.coords[0], a.point.coords[1]);
    return hull_contains_2d(Eigen::Vector2d(x.coords[0], x.coords[1]), pts,
                            std::max(tol, 1e-9));
  }
  return true;
}

}  // namespace geomed
