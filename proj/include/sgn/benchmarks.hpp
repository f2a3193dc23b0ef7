#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "sgn/core.hpp"

namespace sgn::bench {

// Exact solitary wave of the SGN equations.
struct SolitonSpec {
  double h_inf = 1.0;
  double amplitude = 1.0;
  double x0 = 0.0;

  double epsilon() const { return amplitude / h_inf; }
  double kappa_shape() const;       // sqrt(3 eps / (4 h_inf^2 (1 + eps)))
  double c_speed(double g) const;   // sqrt(g h_inf (1 + eps))
};

struct FavreSpec {
  double h0 = 0.2;
  double epsilon_ratio = 1.1;  // h1 / h0
  double x_jump = 0.0;
  // +1: the bore runs towards +x (upstream state on the left), -1: towards -x
  int direction = 1;

  double h1() const { return epsilon_ratio * h0; }
  double u1(double g) const;  // Rankine-Hugoniot jump velocity
  double width() const { return 5.0 * h0; }
  // t = T sqrt(h0 / g)
  double physical_time(double T, double g) const;
};

struct Scenario {
  HsgnState state;
  Bathymetry bathy;  // empty for flat runs
  std::vector<double> gauges;
};

struct PointValue {
  double h;
  double u;
};

PointValue exact_soliton(const SolitonSpec& spec, double x, double t, double g);
// d u / d x of the travelling profile
double exact_soliton_ux(const SolitonSpec& spec, double x, double t, double g);

// Relaxation closure eta = h, w = -h u_x.
HsgnState init_soliton(const SolitonSpec& spec, const Grid1D& grid, double g);
SwState init_soliton_sw(const SolitonSpec& spec, const Grid1D& grid, double g);

// h = 1 + exp(-x^2/20), u = 0
HsgnState init_gaussian_bell(const Grid1D& grid, double g);

// b = (h0 + A exp(-2 (x+50)^2)) / 20, h = h0 + A exp(-x^2) - b, u = 0.01
Scenario init_gaussian_hump(const Grid1D& grid, double g);
// Still water over the same hump: h = 1 - b, u = 0.
Scenario init_lake_at_rest_hump(const Grid1D& grid, double g);

HsgnState init_favre(const FavreSpec& spec, const Grid1D& grid, double g);

// Soliton (A = 0.2, h0 = 1, x0 = 80) approaching a 1:20 ramp to a 0.5 m shelf.
Scenario init_shelf(const Grid1D& grid, double g);

struct DingemansSpec {
  double h0 = 0.8;
  double amplitude = 0.02;
  double k = 0.8406220896381442;
  std::vector<double> gauges{3.04, 9.44, 20.04, 26.04};
  PiecewiseLinear shoal;  // bottom elevation breakpoints
  static PiecewiseLinear default_shoal();
  double velocity_amplitude(double g) const;  // sqrt(g/k tanh(k h0)) A / h0
};

Scenario init_dingemans(const DingemansSpec& spec, const Grid1D& grid, double g);

// Project a relaxation state onto the shallow-water pair (h, hu).
SwState to_sw(const HsgnState& s);
// Lift a shallow-water state with eta = h, w = -h u_x (centred u_x).
HsgnState to_hsgn(const SwState& s, const Grid1D& grid, const Bathymetry* bathy = nullptr);

// ||num - exact||_1 / ||num||_1 over interior values (dx cancels).
double l1_error(std::span<const double> num, std::span<const double> exact, double dx);

struct BoreExtrema {
  double first_peak = 0.0;    // (h - h0) / h0 at the leading crest
  double first_trough = 0.0;  // (h - h0) / h0 at the following trough
  std::size_t peak_index = 0;
  std::size_t trough_index = 0;
  double plateau = 0.0;
};

// `surface` holds interior depths (or elevations z with flat bed), `direction`
// the propagation sign of the bore.
BoreExtrema favre_peak_trough(std::span<const double> surface, const Grid1D& grid,
                              double h0, int direction = 1);

// Mean of (h - h0)/h0 over [from, to] depths behind the leading crest.
double plateau_mean(std::span<const double> surface, const Grid1D& grid, double h0,
                    const BoreExtrema& extrema, double from_depths, double to_depths,
                    int direction = 1);

}  // namespace sgn::bench
