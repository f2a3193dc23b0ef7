#pragma once

#include <limits>
#include <vector>

#include "sgn/core.hpp"
#include "sgn/run_report.hpp"
#include "sgn/spatial_ops.hpp"

namespace sgn::classical {

// h phi - ((h^3/3) phi_x)_x + kappa(h, b) phi = rhs, one row per interior cell.
// Face coefficients h^3_{i+1/2} are averages of the cell values of h^3.
struct PhiSystem {
  TridiagonalSystem system;
  // min over rows of (h_i + kappa_i) / h_i: the diagonal-dominance margin
  double margin = std::numeric_limits<double>::infinity();
};

// `state` must have ghosts filled. Flat runs pass bathy = nullptr (or empty);
// with b == 0 the bathymetric assembly reduces to the flat one bit for bit.
PhiSystem assemble_phi_system(const SwState& state, const Grid1D& grid,
                              const SchemeParams& params, const Bathymetry* bathy);

// phi at every storage cell, ghosts filled with the boundary policy
// (odd parity under reflective walls).
std::vector<double> solve_phi_flat(const SwState& state, const Grid1D& grid,
                                   const SchemeParams& params);
std::vector<double> solve_phi_bathy(const SwState& state, const Bathymetry& bathy,
                                    const Grid1D& grid, const SchemeParams& params);
std::vector<double> solve_phi(const SwState& state, const Grid1D& grid,
                              const SchemeParams& params, const Bathymetry* bathy,
                              double* margin = nullptr);

// max(|u| + sqrt(g h)); dt = CFL dx / sigma_max
double sgn_sigma_max(const SwState& state, const Grid1D& grid, const SchemeParams& params);
double sgn_dt(const SwState& state, const Grid1D& grid, const SchemeParams& params);

// Shallow-water Rusanov update with the h phi source (and -g h b_x). Order 2
// uses MUSCL faces and Heun, re-solving phi at the predictor.
SwState sgn_step(const SwState& state, const Bathymetry* bathy, const Grid1D& grid,
                 const SchemeParams& params, double dt, int order,
                 double* phi_margin = nullptr);

struct SgnResult {
  SwState state;
  RunReport report;
};

// CFL in `params` is the shallow-water CFL (0.9 in the benchmarks).
SgnResult run_sgn(const SwState& initial, const Grid1D& grid, const SchemeParams& params,
                  const Bathymetry* bathy = nullptr, const RunOptions& options = {});

void fill_profiles(RunReport& report, const SwState& state, const Grid1D& grid,
                   const Bathymetry* bathy);

}  // namespace sgn::classical
