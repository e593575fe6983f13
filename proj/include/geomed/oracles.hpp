#pragma once

#include <cstdint>
#include <optional>

#include "geomed/objective.hpp"

namespace geomed {

struct GridOracleResult {
  Point m_ref;
  double f_ref = 0.0;
  /// Covering radius of the final (finest) grid round.
  double spacing = 0.0;
  /// Covering radius of the first full-ball round; f_ref <= f* + this,
  /// since f is 1-Lipschitz.
  double coverage_bound = 0.0;
};

/// Multi-round refined grid minimization of f over the ball in geodesic
/// normal coordinates around the center. Each round shrinks the box by 4
/// around the incumbent; ties break toward the earliest grid index.
GridOracleResult grid_oracle(const DiscreteMeasure& measure,
                             const BallSpec& ball, int resolution = 40,
                             int refine_rounds = 3);

/// Classical Euclidean fixed-point iteration
/// x <- (sum w_i p_i / d_i) / (sum w_i / d_i), with the atom case handled by
/// the characterization test and a deterministic first-coordinate nudge.
Point weiszfeld_euclidean(const DiscreteMeasure& measure, const Point& x0,
                          int iters);

struct CollinearMedianResult {
  Point median;
  bool unique = true;  // false when a whole segment is optimal
};

/// Weighted 1D median along the common geodesic of a collinear measure:
/// leftmost arclength position where the cumulative weight reaches 1/2.
CollinearMedianResult collinear_median_oracle(const DiscreteMeasure& measure,
                                              const BallSpec& ball);

/// Deterministic instance generators; every acceptance-level random instance
/// comes from here with its seed recorded in the Instance.
struct InstanceParams {
  int dimension = 2;
  int atom_count = 10;
  double rho = 1.0;
  double max_radius = 0.8;   // atoms sampled with d(p, a) <= max_radius
  double min_radius = 0.0;
  double curvature = 0.0;    // 0 euclidean, +k sphere, -k hyperbolic
};

Instance random_instance(std::uint64_t seed, const InstanceParams& params);

/// Four unit-weight corners of the unit square in a rho = 1 planar ball.
Instance unit_square_instance();

/// Equilateral triangle with equal weights (side 1, centroid at the origin).
Instance equilateral_instance();

/// Uniform random point of the ball at geodesic radius <= max_radius,
/// deterministic given the generator state.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 1) {}
  /// uniform double in [0, 1)
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next_u64();

 private:
  std::uint64_t state_;
};

Point random_ball_point(DeterministicRng& rng, const BallSpec& ball,
                        double max_radius);
Tangent random_unit_tangent(DeterministicRng& rng, const Point& x);

}  // namespace geomed
