#pragma once

#include "geomed/errors.hpp"

namespace geomed {

/// Sectional curvature bounds delta <= Delta holding on a ball of radius rho.
/// When Delta > 0 the radius must satisfy rho < pi / (4 sqrt(Delta)); the
/// constructor enforces it strictly.
struct CurvatureBounds {
  double delta = 0.0;
  double Delta = 0.0;
  double rho = 0.0;

  CurvatureBounds() = default;
  CurvatureBounds(double delta_, double Delta_, double rho_);

  void validate() const;

  bool operator==(const CurvatureBounds& o) const {
    return delta == o.delta && Delta == o.Delta && rho == o.rho;
  }
};

enum class TauProvenance { user_supplied, heuristic, oracle_certified };

const char* provenance_name(TauProvenance p);

/// (eps, eta) pair certifying that no geodesic eps-tube carries more than
/// 1 - eta of the total mass; tau() is always recomputed from them.
struct ConvexityConstants {
  double eps_mu = 0.0;
  double eta_mu = 0.0;
  CurvatureBounds bounds;
  TauProvenance provenance = TauProvenance::user_supplied;

  double tau() const;
};

/// Generalized sine: solution of u'' + kappa u = 0 with u(0)=0, u'(0)=1.
double s_kappa(double kappa, double t);
/// Its derivative: cos / 1 / cosh depending on the sign of kappa.
double s_kappa_prime(double kappa, double t);

/// Lower Hessian constant D = S'_Delta(2 rho) / S_Delta(2 rho) > 0.
double d_constant(const CurvatureBounds& b);

/// Upper Hessian constant: 1 for delta >= 0, else 2 rho sqrt(-delta) coth(...).
double c_constant(const CurvatureBounds& b);

/// Right-triangle sine bound: sin(angle C) >= L(rho, delta) * d(A, B).
double l_constant(const CurvatureBounds& b);

/// Strong-convexity modulus tau = (1/2) eps^2 eta D(rho,Delta) L(rho,delta)^2.
double tau_constant(double eps_mu, double eta_mu, const CurvatureBounds& b);

/// Uniform lower bound on the ball exit time along -H/|H|:
/// (rho - sigma) / (C(rho,delta) cosh(2 rho sqrt(|Delta|)) + 1).
double beta_floor(const CurvatureBounds& b, double sigma);

/// Third side of a model-space triangle with sides a, b and included angle C.
/// Test oracle; not used by the solver path.
double model_law_of_cosines(double kappa, double a, double b, double angle_C);

namespace detail {
double sin_over_x(double x);      // sin(x)/x, series below |x| < 1e-6
double sinh_over_x(double x);     // sinh(x)/x, series below |x| < 1e-6
double x_coth_x(double x);        // x coth(x), series below |x| < 1e-6
}  // namespace detail

}  // namespace geomed
