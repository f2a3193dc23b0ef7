#pragma once

#include <array>
#include <cmath>

#include "sgn/core.hpp"

// Pointwise algebra of the hyperbolic relaxation of the SGN equations.
//
//   h_t    + (h u)_x          = 0
//   (hu)_t + (h u^2 + p)_x    = 0
//   (h eta)_t + (h u eta)_x   = h w
//   (h w)_t   + (h u w)_x     = -lambda (eta/h - 1)
//
// with p = g h^2/2 + (lambda/3) eta (1 - eta/h).
namespace sgn::hsgn {

namespace detail {
[[noreturn]] void throw_nonpositive_depth(double h);
inline void require_positive(double h) {
  if (!(h > 0.0)) throw_nonpositive_depth(h);
}
}  // namespace detail

struct HsgnCoeffs {
  double c2 = 0.0;     // full celerity squared
  double a2 = 0.0;     // coefficient of h_x in p_x
  double alpha = 0.0;  // coefficient of lambda (h eta)_x in p_x
  double p = 0.0;      // total pressure
};

inline double pressure(double h, double eta, double g, double lambda) {
  detail::require_positive(h);
  const double r = eta / h;
  return 0.5 * g * h * h + h * (lambda / 3.0) * r * (1.0 - r);
}

inline double celerity_squared(double h, double eta, double g, double lambda) {
  detail::require_positive(h);
  const double r = eta / h;
  return g * h + (lambda / 3.0) * r * r;
}

inline double celerity(double h, double eta, double g, double lambda) {
  return std::sqrt(celerity_squared(h, eta, g, lambda));
}

// Sorted (u - c, u, u, u + c).
inline std::array<double, 4> eigenvalues(double h, double u, double eta, double g,
                                         double lambda) {
  const double c = celerity(h, eta, g, lambda);
  return {u - c, u, u, u + c};
}

inline double alpha_coeff(double h, double eta) {
  detail::require_positive(h);
  return -(2.0 * eta / h - 1.0) / (3.0 * h);
}

// p_x = a2 h_x + lambda alpha (h eta)_x
inline HsgnCoeffs pressure_gradient_coeffs(double h, double eta, double g, double lambda) {
  HsgnCoeffs k;
  k.c2 = celerity_squared(h, eta, g, lambda);
  k.alpha = alpha_coeff(h, eta);
  k.a2 = k.c2 - lambda * eta * k.alpha;
  k.p = pressure(h, eta, g, lambda);
  return k;
}

// Right-hand side of the h w equation: -lambda (eta/h - 1).
inline double relaxation_source(double h, double eta, double lambda) {
  detail::require_positive(h);
  return -lambda * (eta / h - 1.0);
}

// Bathymetric variant: p~ = (lambda/3)(1 - eta/h). Momentum flux
// h u^2 + g h^2/2 + eta p~, non-conservative term (g h + 1.5 p~) b_x,
// h w source 3 p~, evolved relaxation variable eta~ = eta + 1.5 b.
inline double bathy_p_tilde(double h, double eta, double lambda) {
  detail::require_positive(h);
  return (lambda / 3.0) * (1.0 - eta / h);
}

inline double bathy_momentum_source(double h, double eta, double g, double lambda,
                                    double b_x) {
  return (g * h + 1.5 * bathy_p_tilde(h, eta, lambda)) * b_x;
}

inline double eta_from_evolved(double eta_tilde, double b) { return eta_tilde - 1.5 * b; }
inline double evolved_from_eta(double eta, double b) { return eta + 1.5 * b; }

}  // namespace sgn::hsgn
