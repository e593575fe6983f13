#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomed/constants.hpp"
#include "geomed/geometry.hpp"

namespace geomed {

/// Closed ball B(a, rho) together with the curvature bounds used by the
/// comparison constants. For the constant-curvature families delta = Delta =
/// kappa unless the caller supplies wider bounds.
struct BallSpec {
  Point center;
  double rho = 0.0;
  CurvatureBounds bounds;
};

/// Builds a ball with bounds defaulted to the manifold curvature.
BallSpec make_ball(Point center, double rho);
BallSpec make_ball(Point center, double rho, double delta, double Delta);

struct Atom {
  Point point;
  double weight = 0.0;
};

/// Finitely supported probability measure; atoms must sit strictly inside
/// the open ball and weights must sum to 1 within 1e-12.
struct DiscreteMeasure {
  std::vector<Atom> atoms;
};

struct Instance {
  DiscreteMeasure measure;
  BallSpec ball;
  std::string name;
  std::uint64_t seed = 0;
};

struct ValidationReport {
  bool valid = false;
  double sigma = 0.0;  // max distance from an atom to the ball center
  std::vector<std::string> violations;
};

/// Support radius sigma = max_i d(p_i, center).
double support_radius(const DiscreteMeasure& measure, const BallSpec& ball);

ValidationReport validate(const DiscreteMeasure& measure, const BallSpec& ball);

/// Throws InvalidMeasure with the first violation if the report is invalid.
void require_valid(const DiscreteMeasure& measure, const BallSpec& ball);

/// True iff the atoms do not all lie on one geodesic. Tests the geodesic
/// through the farthest atom pair (lexicographic tie-break); a point off a
/// common geodesic must sit more than 1e-10 away from that one.
bool condition_star(const DiscreteMeasure& measure, const BallSpec& ball);

enum class ConvexityMode { heuristic, oracle_certified };

/// Searches for (eps, eta) with small tube mass. Heuristic mode scans the
/// atom-pair geodesics only and is not a certified lower bound for tau;
/// oracle_certified mode scans chords through a boundary grid (dimension <= 3)
/// and subtracts a resolution-dependent deviation margin.
ConvexityConstants estimate_convexity_constants(const DiscreteMeasure& measure,
                                                const BallSpec& ball,
                                                ConvexityMode mode,
                                                int resolution);

/// Mass of {atoms within distance < eps of the geodesic line through (x, u)}.
double tube_mass(const DiscreteMeasure& measure, const Point& x,
                 const Tangent& u, double eps);

/// Spec'd signature: delegates to the geometry-level bisection.
inline double ball_exit_time(const Point& x, const Tangent& u,
                             const BallSpec& ball) {
  return ball_exit_time(x, u, ball.center, ball.rho);
}

}  // namespace geomed
