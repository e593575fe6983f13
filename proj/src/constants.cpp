#include "geomed/constants.hpp"

#include <cmath>

namespace geomed {

namespace detail {

double sin_over_x(double x) {
  if (std::abs(x) < 1e-6) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double sinh_over_x(double x) {
  if (std::abs(x) < 1e-6) {
    double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

double x_coth_x(double x) {
  if (std::abs(x) < 1e-6) {
    double x2 = x * x;
    return 1.0 + x2 / 3.0 - x2 * x2 / 45.0;
  }
  return x / std::tanh(x);
}

}  // namespace detail

CurvatureBounds::CurvatureBounds(double delta_, double Delta_, double rho_)
    : delta(delta_), Delta(Delta_), rho(rho_) {
  validate();
}

void CurvatureBounds::validate() const {
  if (!std::isfinite(delta) || !std::isfinite(Delta) || !std::isfinite(rho))
    fail(ErrorCode::InvalidBounds, "bounds must be finite");
  if (delta > Delta)
    fail(ErrorCode::InvalidBounds, "lower curvature bound exceeds the upper one");
  if (!(rho > 0.0)) fail(ErrorCode::InvalidBounds, "radius must be positive");
  if (Delta > 0.0 && !(rho < M_PI / (4.0 * std::sqrt(Delta))))
    fail(ErrorCode::InvalidBounds,
         "positive upper curvature requires rho < pi/(4 sqrt(Delta))");
}

const char* provenance_name(TauProvenance p) {
  switch (p) {
    case TauProvenance::user_supplied: return "user_supplied";
    case TauProvenance::heuristic: return "heuristic";
    case TauProvenance::oracle_certified: return "oracle_certified";
  }
  return "?";
}

double ConvexityConstants::tau() const {
  return tau_constant(eps_mu, eta_mu, bounds);
}

double s_kappa(double kappa, double t) {
  if (kappa > 0.0) return t * detail::sin_over_x(std::sqrt(kappa) * t);
  if (kappa < 0.0) return t * detail::sinh_over_x(std::sqrt(-kappa) * t);
  return t;
}

double s_kappa_prime(double kappa, double t) {
  if (kappa > 0.0) return std::cos(std::sqrt(kappa) * t);
  if (kappa < 0.0) return std::cosh(std::sqrt(-kappa) * t);
  return 1.0;
}

double d_constant(const CurvatureBounds& b) {
  b.validate();
  double t = 2.0 * b.rho;
  return s_kappa_prime(b.Delta, t) / s_kappa(b.Delta, t);
}

double c_constant(const CurvatureBounds& b) {
  b.validate();
  if (b.delta >= 0.0) return 1.0;
  return detail::x_coth_x(2.0 * b.rho * std::sqrt(-b.delta));
}

double l_constant(const CurvatureBounds& b) {
  b.validate();
  if (b.delta > 0.0) {
    double c = std::cos(2.0 * b.rho * std::sqrt(b.delta));
    return 2.0 * std::sqrt(b.delta) /
           (M_PI * std::sqrt(1.0 - c * c * c * c));
  }
  if (b.delta < 0.0) {
    double c = std::cosh(2.0 * b.rho * std::sqrt(-b.delta));
    return std::sqrt(-b.delta) / std::sqrt(c * c * c * c - 1.0);
  }
  return 1.0 / (2.0 * std::sqrt(2.0) * b.rho);
}

double tau_constant(double eps_mu, double eta_mu, const CurvatureBounds& b) {
  if (!(eps_mu > 0.0) || !(eps_mu < b.rho))
    fail(ErrorCode::OutOfRange, "eps_mu must lie in (0, rho)");
  if (!(eta_mu > 0.0) || !(eta_mu <= 1.0))
    fail(ErrorCode::OutOfRange, "eta_mu must lie in (0, 1]");
  double l = l_constant(b);
  return 0.5 * eps_mu * eps_mu * eta_mu * d_constant(b) * l * l;
}

double beta_floor(const CurvatureBounds& b, double sigma) {
  b.validate();
  if (!(sigma >= 0.0) || !(sigma < b.rho))
    fail(ErrorCode::SigmaNotBelowRho, "sigma must lie in [0, rho)");
  double denom =
      c_constant(b) * std::cosh(2.0 * b.rho * std::sqrt(std::abs(b.Delta))) +
      1.0;
  return (b.rho - sigma) / denom;
}

double model_law_of_cosines(double kappa, double a, double b, double angle_C) {
  if (!(a >= 0.0) || !(b >= 0.0))
    fail(ErrorCode::OutOfRange, "sides must be nonnegative");
  if (kappa > 0.0) {
    double sk = std::sqrt(kappa);
    if (a >= M_PI / sk || b >= M_PI / sk)
      fail(ErrorCode::OutOfRange, "side exceeds the spherical injectivity range");
  }
  // planar fallback keeps the kappa -> 0 limit numerically clean
  if (std::abs(kappa) * (a + b) * (a + b) < 1e-12) {
    double c2 = a * a + b * b - 2.0 * a * b * std::cos(angle_C);
    return c2 > 0.0 ? std::sqrt(c2) : 0.0;
  }
  if (kappa > 0.0) {
    double sk = std::sqrt(kappa);
    double cosc = std::cos(sk * a) * std::cos(sk * b) +
                  std::sin(sk * a) * std::sin(sk * b) * std::cos(angle_C);
    return std::acos(std::clamp(cosc, -1.0, 1.0)) / sk;
  }
  double sk = std::sqrt(-kappa);
  double coshc = std::cosh(sk * a) * std::cosh(sk * b) -
                 std::sinh(sk * a) * std::sinh(sk * b) * std::cos(angle_C);
  if (coshc < 1.0) coshc = 1.0;
  return std::acosh(coshc) / sk;
}

}  // namespace geomed
