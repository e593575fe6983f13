#pragma once

#include "geomed/measure.hpp"

namespace geomed {

inline constexpr double kDefaultAtomTol = 1e-9;

/// H(x) plus the mass sitting on x itself. The integral excludes atoms within
/// atom_tol of x, so norm <= 1 - atom_weight_at_x always.
struct SubgradientVector {
  Tangent h;
  double norm = 0.0;
  double atom_weight_at_x = 0.0;
};

struct MedianCertificate {
  bool is_median = false;
  double h_norm = 0.0;
  double atom_weight = 0.0;
  double tol = 0.0;
};

/// Single pass over the atoms producing f(x), the subgradient accumulator and
/// the snapped atom mass. `h_out` must be sized to the ambient dimension;
/// no allocation happens here, which matters in the solver's hot loop.
struct ObjectiveEval {
  double f = 0.0;
  double h_norm = 0.0;
  double atom_weight = 0.0;
};
ObjectiveEval eval_objective(const Point& x, const DiscreteMeasure& measure,
                             double atom_tol, Eigen::VectorXd& h_out,
                             bool compensated = false);

/// f(x) = sum_i w_i d(x, p_i); straight summation in atom order unless
/// `compensated` switches on Kahan accumulation.
double f_value(const Point& x, const DiscreteMeasure& measure,
               const BallSpec& ball, bool compensated = false);

SubgradientVector h_field(const Point& x, const DiscreteMeasure& measure,
                          const BallSpec& ball,
                          double atom_tol = kDefaultAtomTol);

enum class Side { plus, minus };

/// One-sided derivative of f along the unit direction u:
/// <u, h> + mu{x} on the plus side, <u, h> - mu{x} on the minus side.
double directional_derivative(const Point& x, const Tangent& u,
                              const DiscreteMeasure& measure,
                              const BallSpec& ball, Side side,
                              double atom_tol = kDefaultAtomTol);

/// Median characterization |H(x)| <= mu{x} + tol, with both numbers reported.
MedianCertificate is_median(const Point& x, const DiscreteMeasure& measure,
                            const BallSpec& ball, double tol,
                            double atom_tol = kDefaultAtomTol);

/// Necessary condition d(x, center) <= sigma + tol; in the Euclidean family
/// additionally exact membership of x in the convex hull of the atoms.
bool location_check(const Point& x, const DiscreteMeasure& measure,
                    const BallSpec& ball, double tol = 1e-9);

}  // namespace geomed
