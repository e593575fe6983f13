#include "geomed/measure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace geomed {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kCollinearTol = 1e-10;

// Deterministic quasi-uniform boundary grid of `count` points on the sphere
// of geodesic radius rho around the ball center (n = 2 or 3 only).
std::vector<Point> boundary_grid(const BallSpec& ball, int count) {
  const ManifoldSpec& m = ball.center.manifold;
  const int n = m.dimension;
  // Ambient-orthonormal tangent basis at the center via Gram-Schmidt.
  std::vector<Eigen::VectorXd> basis;
  const int ad = m.ambient_dim();
  for (int i = 0; i < ad && static_cast<int>(basis.size()) < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(ad);
    e[i] = 1.0;
    e = project_to_tangent(ball.center, e);
    for (const auto& b : basis) e -= ambient_inner(m, e, b) * b;
    double nn = ambient_inner(m, e, e);
    if (nn > 1e-12) basis.push_back(e / std::sqrt(nn));
  }
  std::vector<Point> out;
  out.reserve(count);
  if (n == 2) {
    for (int i = 0; i < count; ++i) {
      double th = 2.0 * M_PI * i / count;
      Eigen::VectorXd v = std::cos(th) * basis[0] + std::sin(th) * basis[1];
      out.push_back(exp_map(make_tangent(ball.center, ball.rho * v)));
    }
  } else {
    // Fibonacci sphere
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      double z = 1.0 - 2.0 * (i + 0.5) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double th = ga * i;
      Eigen::VectorXd v = r * std::cos(th) * basis[0] +
                          r * std::sin(th) * basis[1] + z * basis[2];
      out.push_back(exp_map(make_tangent(ball.center, ball.rho * v)));
    }
  }
  return out;
}

struct FarthestPair {
  int i = -1, j = -1;
  double dist = -1.0;
};

FarthestPair farthest_atom_pair(const DiscreteMeasure& measure) {
  FarthestPair best;
  const int n = static_cast<int>(measure.atoms.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = distance(measure.atoms[i].point, measure.atoms[j].point);
      if (d > best.dist) best = {i, j, d};  // strict > keeps the first pair
    }
  return best;
}

}  // namespace

BallSpec make_ball(Point center, double rho) {
  double kappa = center.manifold.curvature;
  return BallSpec{std::move(center), rho, CurvatureBounds(kappa, kappa, rho)};
}

BallSpec make_ball(Point center, double rho, double delta, double Delta) {
  double kappa = center.manifold.curvature;
  if (delta > kappa || Delta < kappa)
    fail(ErrorCode::InvalidBounds,
         "override bounds must contain the manifold curvature");
  return BallSpec{std::move(center), rho, CurvatureBounds(delta, Delta, rho)};
}

double support_radius(const DiscreteMeasure& measure, const BallSpec& ball) {
  double sigma = 0.0;
  for (const auto& a : measure.atoms)
    sigma = std::max(sigma, distance(a.point, ball.center));
  return sigma;
}

ValidationReport validate(const DiscreteMeasure& measure,
                          const BallSpec& ball) {
  ValidationReport rep;
  if (ball.bounds.rho != ball.rho)
    rep.violations.push_back("curvature bounds carry a different radius");
  if (measure.atoms.empty()) {
    rep.violations.push_back("measure has no atoms");
    rep.valid = false;
    return rep;
  }
  double wsum = 0.0;
  for (std::size_t i = 0; i < measure.atoms.size(); ++i) {
    const Atom& a = measure.atoms[i];
    if (!(a.weight > 0.0))
      rep.violations.push_back("atom " + std::to_string(i) +
                               ": weight must be positive");
    if (!(a.point.manifold == ball.center.manifold)) {
      rep.violations.push_back("atom " + std::to_string(i) +
                               ": wrong manifold");
      continue;
    }
    double d = distance(a.point, ball.center);
    rep.sigma = std::max(rep.sigma, d);
    if (!(d < ball.rho))
      rep.violations.push_back("atom " + std::to_string(i) +
                               ": support must lie strictly inside the ball");
    if (embedding_residual(a.point) > 1e-10)
      rep.violations.push_back("atom " + std::to_string(i) +
                               ": embedding constraint violated");
    wsum += a.weight;
  }
  if (std::abs(wsum - 1.0) > kWeightSumTol)
    rep.violations.push_back("weights sum to " + std::to_string(wsum) +
                             ", expected 1");
  rep.valid = rep.violations.empty();
  return rep;
}

void require_valid(const DiscreteMeasure& measure, const BallSpec& ball) {
  ValidationReport rep = validate(measure, ball);
  if (!rep.valid) fail(ErrorCode::InvalidMeasure, rep.violations.front());
}

bool condition_star(const DiscreteMeasure& measure, const BallSpec& ball) {
  require_valid(measure, ball);
  // Count distinct atom positions; one or two always lie on a geodesic.
  std::vector<int> distinct;
  for (int i = 0; i < static_cast<int>(measure.atoms.size()); ++i) {
    bool dup = false;
    for (int j : distinct)
      if (distance(measure.atoms[i].point, measure.atoms[j].point) <= 1e-12) {
        dup = true;
        break;
      }
    if (!dup) distinct.push_back(i);
  }
  if (distinct.size() <= 2) return false;

  FarthestPair fp = farthest_atom_pair(measure);
  const Point& p0 = measure.atoms[fp.i].point;
  const Point& p1 = measure.atoms[fp.j].point;
  Tangent dir = log_map(p0, p1);
  for (const auto& a : measure.atoms)
    if (geodesic_line_distance(a.point, p0, dir) > kCollinearTol) return true;
  return false;
}

double tube_mass(const DiscreteMeasure& measure, const Point& x,
                 const Tangent& u, double eps) {
  double mass = 0.0;
  for (const auto& a : measure.atoms)
    if (geodesic_line_distance(a.point, x, u) < eps) mass += a.weight;
  return mass;
}

ConvexityConstants estimate_convexity_constants(const DiscreteMeasure& measure,
                                                const BallSpec& ball,
                                                ConvexityMode mode,
                                                int resolution) {
  if (resolution < 2)
    fail(ErrorCode::OutOfRange, "resolution must be at least 2");
  if (!condition_star(measure, ball))
    fail(ErrorCode::ConditionStarFails,
         "support is contained in a single geodesic");

  struct Line {
    Point base;
    Tangent dir;
  };
  std::vector<Line> lines;
  double margin = 0.0;

  if (mode == ConvexityMode::heuristic) {
    const int n = static_cast<int>(measure.atoms.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Point& pi = measure.atoms[i].point;
        const Point& pj = measure.atoms[j].point;
        if (distance(pi, pj) <= 1e-12) continue;
        lines.push_back({pi, log_map(pi, pj)});
      }
  } else {
    const ManifoldSpec& m = ball.center.manifold;
    if (m.dimension > 3)
      fail(ErrorCode::DimensionTooLargeForOracle,
           "certified tube search supports dimension <= 3 only");
    std::vector<Point> grid = boundary_grid(ball, resolution);
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i + 1; j < grid.size(); ++j) {
        if (distance(grid[i], grid[j]) <= 1e-9) continue;
        lines.push_back({grid[i], log_map(grid[i], grid[j])});
      }
    // Worst-case chord deviation when endpoints move to the nearest grid
    // point: boundary spacing, amplified on the sphere where geodesics
    // between perturbed endpoints can bulge.
    double circumference = 2.0 * M_PI * s_kappa(m.curvature, ball.rho);
    double spacing = (m.dimension == 2)
                         ? circumference / resolution
                         : 2.0 * ball.rho * std::sqrt(4.0 * M_PI / resolution);
    double bulge = 1.0;
    if (m.curvature > 0.0)
      bulge = 1.0 / std::cos(2.0 * ball.rho * std::sqrt(m.curvature));
    margin = 2.0 * spacing * bulge;
  }

  // Atom-to-line distances are eps-independent; compute them once.
  const int natoms = static_cast<int>(measure.atoms.size());
  std::vector<double> dist_to_line(lines.size() * natoms);
  for (std::size_t li = 0; li < lines.size(); ++li)
    for (int ai = 0; ai < natoms; ++ai)
      dist_to_line[li * natoms + ai] = geodesic_line_distance(
          measure.atoms[ai].point, lines[li].base, lines[li].dir);

  double best_score = -1.0;
  double best_eps = 0.0, best_eta = 0.0;
  for (int j = 1; j <= resolution; ++j) {
    double eps = ball.rho * j / (resolution + 1);
    double probe = eps + margin;
    double worst = 0.0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      double mass = 0.0;
      for (int ai = 0; ai < natoms; ++ai)
        if (dist_to_line[li * natoms + ai] <= probe)
          mass += measure.atoms[ai].weight;
      worst = std::max(worst, mass);
      if (worst >= 1.0) break;
    }
    double eta = 1.0 - worst;
    if (eta <= 0.0) continue;
    double score = eps * eps * eta;
    if (score > best_score) {
      best_score = score;
      best_eps = eps;
      best_eta = eta;
    }
  }
  if (best_score <= 0.0)
    fail(ErrorCode::ConditionStarFails,
         "no positive-eta tube radius found at this resolution");

  ConvexityConstants out;
  out.eps_mu = best_eps;
  out.eta_mu = best_eta;
  out.bounds = ball.bounds;
  out.provenance = mode == ConvexityMode::heuristic
                       ? TauProvenance::heuristic
                       : TauProvenance::oracle_certified;
  return out;
}

}  // namespace geomed
