#pragma once

// Convective Rusanov divergences shared by the explicit and SI solvers
// (private header).

#include <array>
#include <cmath>
#include <vector>

#include "sgn/core.hpp"
#include "sgn/spatial_ops.hpp"

namespace sgn::detail {

struct HsgnFace {
  double h, q, heta, hw, b;
};

// D^_x of (q, q u, heta u, hw u) per interior cell. Component 0 (mass) is
// only meaningful when the caller asked for it.
struct ConvectiveDivergence {
  std::vector<double> mass, q, heta, hw;
};

enum class FaceSpeed { Material, Spectral };

inline ConvectiveDivergence convective_divergence(const HsgnState& s, const Grid1D& grid,
                                                  int order, bool minmod, FaceSpeed speed,
                                                  double g, double lambda,
                                                  const Bathymetry* bathy) {
  const std::size_t n = grid.size();
  const FaceValues fh = reconstruct(s.h, grid.dx, order, minmod);
  const FaceValues fq = reconstruct(s.q, grid.dx, order, minmod);
  const FaceValues fe = reconstruct(s.heta, grid.dx, order, minmod);
  const FaceValues fw = reconstruct(s.hw, grid.dx, order, minmod);
  const bool has_b = bathy != nullptr && !bathy->empty();
  std::vector<HsgnFace> minus(n), plus(n);
  for (std::size_t f = grid.begin() - 1; f < grid.end(); ++f) {
    const double bf = has_b ? 0.5 * (bathy->b[f] + bathy->b[f + 1]) : 0.0;
    minus[f] = HsgnFace{fh.minus[f], fq.minus[f], fe.minus[f], fw.minus[f], bf};
    plus[f] = HsgnFace{fh.plus[f], fq.plus[f], fe.plus[f], fw.plus[f], bf};
  }
  auto conserved = [](const HsgnFace& f) {
    return std::array<double, 4>{f.h, f.q, f.heta, f.hw};
  };
  auto flux = [](const HsgnFace& f) {
    const double u = f.q / f.h;
    return std::array<double, 4>{f.q, f.q * u, f.heta * u, f.hw * u};
  };
  auto signal = [&](const HsgnFace& f) {
    const double u = std::abs(f.q / f.h);
    if (speed == FaceSpeed::Material) return u;
    const double r = f.heta / (f.h * f.h) - 1.5 * f.b / f.h;  // eta / h
    return u + std::sqrt(g * f.h + (lambda / 3.0) * r * r);
  };
  auto face_speed = [&](const HsgnFace& a, const HsgnFace& b) {
    return std::max(signal(a), signal(b));
  };
  const auto div = rusanov_flux_diff<4, HsgnFace>(
      conserved, flux, face_speed, std::span<const HsgnFace>(minus),
      std::span<const HsgnFace>(plus), grid);
  ConvectiveDivergence out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                           std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    out.mass[i] = div[i][0];
    out.q[i] = div[i][1];
    out.heta[i] = div[i][2];
    out.hw[i] = div[i][3];
  }
  return out;
}

// eta at cell i, undoing the 1.5 b shift of bathymetric runs.
inline double cell_eta(const HsgnState& s, const Bathymetry* bathy, std::size_t i) {
  const double eta_evolved = s.heta[i] / s.h[i];
  return (bathy != nullptr && !bathy->empty()) ? eta_evolved - 1.5 * bathy->b[i]
                                               : eta_evolved;
}

}  // namespace sgn::detail
