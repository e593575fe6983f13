#pragma once

#include <Eigen/Dense>

#include "geomed/errors.hpp"

namespace geomed {

enum class Family { Euclidean, Sphere, Hyperbolic };

const char* family_name(Family f);

/// A constant-curvature model space: Euclidean R^n, the sphere of radius
/// 1/sqrt(kappa) embedded in R^{n+1}, or the hyperboloid of "radius"
/// 1/sqrt(-kappa) in Minkowski space R^{n,1} (time coordinate first).
struct ManifoldSpec {
  Family family = Family::Euclidean;
  int dimension = 0;
  double curvature = 0.0;

  static ManifoldSpec euclidean(int n);
  static ManifoldSpec sphere(int n, double kappa);
  static ManifoldSpec hyperbolic(int n, double kappa);

  /// Length of coordinate vectors: n for Euclidean, n+1 for the embeddings.
  int ambient_dim() const {
    return family == Family::Euclidean ? dimension : dimension + 1;
  }

  /// Embedding scale 1/sqrt(|kappa|); unused for Euclidean.
  double radius() const;

  void validate() const;

  bool operator==(const ManifoldSpec& o) const {
    return family == o.family && dimension == o.dimension &&
           curvature == o.curvature;
  }
};

struct Point {
  ManifoldSpec manifold;
  Eigen::VectorXd coords;
};

/// Tangent vector in embedding coordinates, orthogonal to its base point
/// under the family's ambient inner product.
struct Tangent {
  Point base;
  Eigen::VectorXd vec;
};

/// Ambient inner product at a base point: Euclidean for the flat and
/// spherical families, Minkowski (-++...+) for the hyperbolic one.
double ambient_inner(const ManifoldSpec& m, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& v);

double tangent_norm(const Tangent& v);

/// Snaps coords back onto the embedding (rescale to the sphere/hyperboloid);
/// drift above ~1e-12 per operation indicates a bug upstream.
Eigen::VectorXd reproject(const ManifoldSpec& m, Eigen::VectorXd coords);

/// |constraint residual| of the embedding equation; 0 for Euclidean.
double embedding_residual(const Point& x);

/// Removes the ambient component along the base point, leaving a tangent.
Eigen::VectorXd project_to_tangent(const Point& x, Eigen::VectorXd v);

Point make_point(const ManifoldSpec& m, Eigen::VectorXd coords);
Tangent make_tangent(const Point& base, Eigen::VectorXd vec);

double distance(const Point& x, const Point& y);
Point exp_map(const Tangent& v);
Tangent log_map(const Point& x, const Point& p);

/// gamma(t) from x along the unit direction u, i.e. exp_x(t u).
Point geodesic_point(const Point& x, const Tangent& u, double t);

/// Angle at x between the geodesics toward p and q, in [0, pi].
double angle(const Point& x, const Point& p, const Point& q);

/// Distance from q to the complete geodesic through x with unit direction u
/// (the full line / great circle, not just a segment).
double geodesic_line_distance(const Point& q, const Point& x,
                              const Tangent& u);

/// Exit time of t -> gamma_x(t) from the closed ball of radius rho around
/// `center`, found by bisection on [0, 2 rho] to absolute tolerance 1e-10.
double ball_exit_time(const Point& x, const Tangent& u, const Point& center,
                      double rho);

namespace detail {
/// Stable squared chord length between two embedded points (ambient metric).
double chord_sq(const ManifoldSpec& m, const Eigen::VectorXd& x,
                const Eigen::VectorXd& y);
void check_same_manifold(const Point& x, const Point& y);
/// Writes exp_x(t u) for a unit tangent u into `out` without allocating.
void exp_unit_into(const Point& x, const Eigen::VectorXd& u, double t,
                   Eigen::VectorXd& out);
}  // namespace detail

}  // namespace geomed
