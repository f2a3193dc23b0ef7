#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "sgn/core.hpp"

namespace sgn {

// Centred flux difference (F[i+1] - F[i-1]) / (2 dx) at every cell that has
// both neighbours; the two end entries are left at zero.
std::vector<double> central_flux_diff(std::span<const double> F, double dx);

// Face values around face f, the face between storage cells f and f+1.
// Only faces 1 .. size-3 are populated (their stencils need one extra cell).
struct FaceValues {
  std::vector<double> minus;  // left of the face, v_{f+1/2}^-
  std::vector<double> plus;   // right of the face, v_{f+1/2}^+
};

// Unlimited central-slope MUSCL reconstruction, optionally minmod-limited.
FaceValues muscl_reconstruct(std::span<const double> v, double dx,
                             bool minmod = false);
// Piecewise-constant faces (first-order schemes).
FaceValues piecewise_constant_faces(std::span<const double> v);
// Picks MUSCL for order 2, piecewise-constant otherwise.
FaceValues reconstruct(std::span<const double> v, double dx, int order,
                       bool minmod = false);

// F^ = (F(U-) + F(U+))/2 - alpha (U+ - U-)/2 for one conserved component.
inline double rusanov_face_flux(double f_minus, double f_plus, double u_minus,
                                double u_plus, double alpha) {
  return 0.5 * (f_minus + f_plus) - 0.5 * alpha * (u_plus - u_minus);
}

// Divided difference of Rusanov face fluxes for an M-component system.
// `conserved(s)` and `flux(s)` map a face state to M components;
// `speed(s_minus, s_plus)` gives the dissipation coefficient of the face.
// Output index i holds (F^_{i+1/2} - F^_{i-1/2}) / dx for every interior cell.
template <std::size_t M, class State, class ConservedFn, class FluxFn, class SpeedFn>
std::vector<std::array<double, M>> rusanov_flux_diff(
    ConservedFn&& conserved, FluxFn&& flux, SpeedFn&& speed,
    std::span<const State> minus, std::span<const State> plus, const Grid1D& grid) {
  using Vec = std::array<double, M>;
  const std::size_t first_face = grid.begin() - 1;
  const std::size_t last_face = grid.end() - 1;
  std::vector<Vec> face_flux(grid.size(), Vec{});
  for (std::size_t f = first_face; f <= last_face; ++f) {
    const Vec um = conserved(minus[f]);
    const Vec up = conserved(plus[f]);
    const Vec fm = flux(minus[f]);
    const Vec fp = flux(plus[f]);
    const double alpha = speed(minus[f], plus[f]);
    for (std::size_t c = 0; c < M; ++c) {
      face_flux[f][c] = rusanov_face_flux(fm[c], fp[c], um[c], up[c], alpha);
    }
  }
  std::vector<Vec> out(grid.size(), Vec{});
  const double inv_dx = 1.0 / grid.dx;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    for (std::size_t c = 0; c < M; ++c) {
      out[i][c] = (face_flux[i][c] - face_flux[i - 1][c]) * inv_dx;
    }
  }
  return out;
}

// Tridiagonal system: row i reads lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1].
// With `periodic`, lower[0] couples x[n-1] and upper[n-1] couples x[0].
struct TridiagonalSystem {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;
  std::vector<double> rhs;
  bool periodic = false;

  TridiagonalSystem() = default;
  explicit TridiagonalSystem(std::size_t n, bool periodic_flag = false)
      : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0), periodic(periodic_flag) {}
  std::size_t size() const { return diag.size(); }
};

// Thomas recurrence; periodic systems use a Sherman-Morrison correction.
// Throws SingularPivot when elimination meets a zero pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys);

// A x - rhs in the max norm.
double tridiagonal_residual(const TridiagonalSystem& sys, std::span<const double> x);

// Band matrix with `lower` sub- and `upper` super-diagonals; at(i, j) is valid
// for i - lower <= j <= i + upper.
struct BandedSystem {
  std::size_t n = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<double> band;  // row-major, lower + upper + 1 entries per row
  std::vector<double> rhs;

  BandedSystem() = default;
  BandedSystem(std::size_t n_, std::size_t kl, std::size_t ku)
      : n(n_), lower(kl), upper(ku), band(n_ * (kl + ku + 1), 0.0), rhs(n_, 0.0) {}
  std::size_t size() const { return n; }
  double& at(std::size_t i, std::size_t j) { return band[i * (lower + upper + 1) + j + lower - i]; }
  double at(std::size_t i, std::size_t j) const {
    return band[i * (lower + upper + 1) + j + lower - i];
  }
  bool in_band(std::size_t i, std::size_t j) const {
    return j + lower >= i && j <= i + upper && j < n;
  }
};

// Gaussian elimination with partial pivoting inside the band.
std::vector<double> solve_banded(const BandedSystem& sys);
double banded_residual(const BandedSystem& sys, std::span<const double> x);

}  // namespace sgn
