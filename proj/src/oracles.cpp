#include "geomed/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace geomed {

namespace {

// Ambient-orthonormal tangent basis at x (deterministic Gram-Schmidt over
// the coordinate axes).
std::vector<Eigen::VectorXd> tangent_basis(const Point& x) {
  const ManifoldSpec& m = x.manifold;
  std::vector<Eigen::VectorXd> basis;
  for (int i = 0; i < m.ambient_dim() &&
                  static_cast<int>(basis.size()) < m.dimension;
       ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m.ambient_dim());
    e[i] = 1.0;
    e = project_to_tangent(x, e);
    for (const auto& b : basis) e -= ambient_inner(m, e, b) * b;
    double nn = ambient_inner(m, e, e);
    if (nn > 1e-12) basis.push_back(e / std::sqrt(nn));
  }
  return basis;
}

}  // namespace

double DeterministicRng::uniform() {
  return (next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t DeterministicRng::next_u64() {
  // splitmix64: tiny, portable, adequate for test instance generation
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Point random_ball_point(DeterministicRng& rng, const BallSpec& ball,
                        double max_radius) {
  const ManifoldSpec& m = ball.center.manifold;
  std::vector<Eigen::VectorXd> basis = tangent_basis(ball.center);
  Eigen::VectorXd dir = Eigen::VectorXd::Zero(m.ambient_dim());
  double nn = 0.0;
  do {
    dir.setZero();
    for (int i = 0; i < m.dimension; ++i)
      dir += rng.uniform(-1.0, 1.0) * basis[i];
    nn = ambient_inner(m, dir, dir);
  } while (nn > 1.0 || nn < 1e-8);
  dir /= std::sqrt(nn);
  double r = max_radius *
             std::pow(rng.uniform(), 1.0 / std::max(1, m.dimension));
  return exp_map(make_tangent(ball.center, r * dir));
}

Tangent random_unit_tangent(DeterministicRng& rng, const Point& x) {
  const ManifoldSpec& m = x.manifold;
  std::vector<Eigen::VectorXd> basis = tangent_basis(x);
  Eigen::VectorXd dir = Eigen::VectorXd::Zero(m.ambient_dim());
  double nn = 0.0;
  do {
    dir.setZero();
    for (int i = 0; i < m.dimension; ++i)
      dir += rng.uniform(-1.0, 1.0) * basis[i];
    nn = ambient_inner(m, dir, dir);
  } while (nn > 1.0 || nn < 1e-8);
  return make_tangent(x, dir / std::sqrt(nn));
}

GridOracleResult grid_oracle(const DiscreteMeasure& measure,
                             const BallSpec& ball, int resolution,
                             int refine_rounds) {
  const ManifoldSpec& m = ball.center.manifold;
  if (m.dimension > 3)
    fail(ErrorCode::DimensionTooLarge, "grid oracle supports dimension <= 3");
  if (resolution < 2 || refine_rounds < 1)
    fail(ErrorCode::OutOfRange, "need resolution >= 2 and >= 1 round");
  require_valid(measure, ball);

  const int n = m.dimension;
  std::vector<Eigen::VectorXd> basis = tangent_basis(ball.center);
  Eigen::VectorXd v(m.ambient_dim());

  auto point_at = [&](const Eigen::VectorXd& c) {
    v.setZero();
    for (int i = 0; i < n; ++i) v += c[i] * basis[i];
    return exp_map(make_tangent(ball.center, v));
  };

  Eigen::VectorXd box_center = Eigen::VectorXd::Zero(n);
  double half = ball.rho;
  double best_f = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_coords = Eigen::VectorXd::Zero(n);
  double coverage_bound = 0.0, spacing = 0.0;

  for (int round = 0; round < refine_rounds; ++round) {
    double h = 2.0 * half / (resolution - 1);
    spacing = 0.5 * h * std::sqrt(static_cast<double>(n));
    if (round == 0) coverage_bound = spacing;

    std::vector<int> idx(n, 0);
    Eigen::VectorXd c(n);
    bool done = false;
    while (!done) {
      for (int i = 0; i < n; ++i) c[i] = box_center[i] - half + idx[i] * h;
      if (c.norm() <= ball.rho) {
        double f = f_value(point_at(c), measure, ball);
        if (f < best_f) {  // strict: earliest grid index wins ties
          best_f = f;
          best_coords = c;
        }
      }
      int d = 0;
      while (d < n && ++idx[d] == resolution) idx[d++] = 0;
      done = d == n;
    }
    box_center = best_coords;
    half /= 4.0;
  }

  GridOracleResult out;
  out.m_ref = point_at(best_coords);
  out.f_ref = best_f;
  out.spacing = spacing;
  out.coverage_bound = coverage_bound;
  return out;
}

Point weiszfeld_euclidean(const DiscreteMeasure& measure, const Point& x0,
                          int iters) {
  if (x0.manifold.family != Family::Euclidean)
    fail(ErrorCode::NonEuclidean, "Weiszfeld oracle is Euclidean-only");
  const int n = static_cast<int>(measure.atoms.size());
  Eigen::VectorXd x = x0.coords;
  const double atom_tol = kDefaultAtomTol;

  for (int it = 0; it < iters; ++it) {
    int on_atom = -1;
    for (int i = 0; i < n; ++i)
      if ((x - measure.atoms[i].point.coords).norm() <= atom_tol) {
        on_atom = i;
        break;
      }
    if (on_atom >= 0) {
      Eigen::VectorXd r = Eigen::VectorXd::Zero(x.size());
      for (int i = 0; i < n; ++i) {
        if (i == on_atom) continue;
        Eigen::VectorXd diff = measure.atoms[i].point.coords - x;
        r += measure.atoms[i].weight * diff / diff.norm();
      }
      if (r.norm() <= measure.atoms[on_atom].weight) break;  // median atom
      // stuck on a non-median atom: deterministic nudge along e_0
      x[0] += atom_tol * 10.0;
      continue;
    }
    Eigen::VectorXd num = Eigen::VectorXd::Zero(x.size());
    double den = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = (x - measure.atoms[i].point.coords).norm();
      double c = measure.atoms[i].weight / d;
      num += c * measure.atoms[i].point.coords;
      den += c;
    }
    Eigen::VectorXd next = num / den;
    double move = (next - x).norm();
    x = next;
    if (move <= 1e-15) break;
  }
  return make_point(x0.manifold, x);
}

CollinearMedianResult collinear_median_oracle(const DiscreteMeasure& measure,
                                              const BallSpec& ball) {
  require_valid(measure, ball);
  if (condition_star(measure, ball))
    fail(ErrorCode::NotCollinear, "atoms are not contained in one geodesic");

  const int n = static_cast<int>(measure.atoms.size());
  int bi = 0, bj = 0;
  double bd = -1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = distance(measure.atoms[i].point, measure.atoms[j].point);
      if (d > bd) {
        bd = d;
        bi = i;
        bj = j;
      }
    }
  if (bd <= 1e-12) return {measure.atoms[0].point, true};  // single position

  // Arclength parameterization from one endpoint of the farthest pair; all
  // atoms lie between the endpoints, so positions are in [0, bd].
  const Point& origin = measure.atoms[bi].point;
  Tangent dir = log_map(origin, measure.atoms[bj].point);
  Tangent unit = make_tangent(origin, dir.vec / tangent_norm(dir));

  struct Pos {
    double s;
    double w;
    int index;
  };
  std::vector<Pos> pos(n);
  for (int i = 0; i < n; ++i) {
    Tangent li = log_map(origin, measure.atoms[i].point);
    double s = tangent_norm(li);
    double side = ambient_inner(origin.manifold, li.vec, unit.vec);
    pos[i] = {side >= 0.0 ? s : -s, measure.atoms[i].weight, i};
  }
  std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
    return a.s < b.s || (a.s == b.s && a.index < b.index);
  });

  // Leftmost minimizer under the cumulative-weight >= 1/2 rule; an exact
  // half split makes the whole segment to the next atom optimal.
  double cum = 0.0;
  for (int i = 0; i < n; ++i) {
    cum += pos[i].w;
    if (cum >= 0.5 - 1e-15) {
      bool tie = std::abs(cum - 0.5) <= 1e-12 && i + 1 < n;
      return {measure.atoms[pos[i].index].point, !tie};
    }
  }
  return {measure.atoms[pos[n - 1].index].point, true};
}

Instance random_instance(std::uint64_t seed, const InstanceParams& params) {
  ManifoldSpec m;
  if (params.curvature > 0.0)
    m = ManifoldSpec::sphere(params.dimension, params.curvature);
  else if (params.curvature < 0.0)
    m = ManifoldSpec::hyperbolic(params.dimension, params.curvature);
  else
    m = ManifoldSpec::euclidean(params.dimension);

  Eigen::VectorXd c = Eigen::VectorXd::Zero(m.ambient_dim());
  if (m.family != Family::Euclidean) c[0] = m.radius();
  Point center = make_point(m, c);

  Instance inst;
  inst.ball = make_ball(center, params.rho);
  inst.seed = seed;

  DeterministicRng rng(seed);
  std::vector<double> w(params.atom_count);
  double wsum = 0.0;
  for (double& wi : w) {
    wi = rng.uniform(0.5, 1.5);
    wsum += wi;
  }
  for (int i = 0; i < params.atom_count; ++i) {
    Point p = random_ball_point(rng, inst.ball, params.max_radius);
    if (params.min_radius > 0.0) {
      Tangent t = log_map(inst.ball.center, p);
      double tn = tangent_norm(t);
      if (tn < params.min_radius && tn > 1e-12)
        p = exp_map(make_tangent(inst.ball.center,
                                 (params.min_radius / tn) * t.vec));
    }
    inst.measure.atoms.push_back({p, w[i] / wsum});
  }
  return inst;
}

Instance unit_square_instance() {
  ManifoldSpec m = ManifoldSpec::euclidean(2);
  Point center = make_point(m, Eigen::Vector2d(0.0, 0.0));
  Instance inst;
  inst.ball = make_ball(center, 1.0);
  inst.name = "unit_square";
  for (double sx : {-0.5, 0.5})
    for (double sy : {-0.5, 0.5})
      inst.measure.atoms.push_back(
          {make_point(m, Eigen::Vector2d(sx, sy)), 0.25});
  return inst;
}

Instance equilateral_instance() {
  ManifoldSpec m = ManifoldSpec::euclidean(2);
  Point center = make_point(m, Eigen::Vector2d(0.0, 0.0));
  Instance inst;
  inst.ball = make_ball(center, 1.0);
  inst.name = "equilateral";
  const double r = 1.0 / std::sqrt(3.0);  // circumradius of a unit-side triangle
  for (int k = 0; k < 3; ++k) {
    double th = M_PI / 2.0 + 2.0 * M_PI * k / 3.0;
    inst.measure.atoms.push_back(
        {make_point(m, Eigen::Vector2d(r * std::cos(th), r * std::sin(th))),
         1.0 / 3.0});
  }
  return inst;
}

}  // namespace geomed
