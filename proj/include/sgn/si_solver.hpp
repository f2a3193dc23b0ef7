#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "sgn/core.hpp"
#include "sgn/run_report.hpp"
#include "sgn/spatial_ops.hpp"

namespace sgn::si_hsgn {

// Two-stage IMEX-RK pair: explicit (0; c 0 | 1-g g), implicit (g; 1-g g | 1-g g).
struct ImexTableau {
  double gamma = 0.0;
  double c_coef = 0.0;
  std::array<std::array<double, 2>, 2> a_explicit{};
  std::array<std::array<double, 2>, 2> a_implicit{};
  std::array<double, 2> b_explicit{};
  std::array<double, 2> b_implicit{};

  static ImexTableau standard();

  std::array<double, 2> c_explicit() const;
  std::array<double, 2> c_implicit() const;
  // max |sum b - 1|, |sum b c - 1/2| over both tableaus
  double order_condition_defect() const;
  bool stiffly_accurate() const;
};

// Everything the implicit chain of one stage produces before the depth solve.
// Fields cover all storage cells; only interior entries of h_dagger are used.
struct ImplicitStageWork {
  std::vector<double> hw_dagger, heta_dagger, q_dagger, h_dagger;
  std::vector<double> heta_star, hw_star, h_star;
  // relaxation defect of the predictor, (h eta)* + tau (h w)* - (h*)^2; see
  // relaxation_jump in si_solver.cpp
  std::vector<double> defect;
  std::vector<double> beta1, beta2, kappa, delta, alpha;
  double kappa_min = std::numeric_limits<double>::infinity();
  std::size_t kappa_argmin = 0;
};

// The depth operator couples cell i with i +- s (s = 1 compact, 2 wide), so on
// periodic meshes and for the compact stencil it splits into independent
// tridiagonal chains of interior cells.
struct DepthChain {
  std::vector<std::size_t> cells;  // interior indices, in chain order
  TridiagonalSystem system;
};

// Exactly one of `chains` / `banded` is populated. Wide stencil with a
// transmissive or reflective edge: the ghost rules tie the two parities
// together near the ends and the system is solved as one pentadiagonal band.
// The systems are written for the increment h - h_base (h_base = interior h*),
// with right-hand sides in difference form, so uniform states come back exactly.
struct DepthSystem {
  std::vector<DepthChain> chains;
  std::optional<BandedSystem> banded;
  std::vector<double> h_base;
  std::size_t n_cells = 0;
  ImplicitStageWork work;
};

// Interior depths solving the system.
std::vector<double> solve_depth_system(const DepthSystem& ds);

// (q, h eta, h w)* = base - tau D^(convective flux of `explicit_input`); h* only
// takes the |u| dissipation part of the mass flux.
// Bathymetric runs work in the true h*eta inside a stage; see si_solver.cpp.
HsgnState convective_predictor(const HsgnState& base, const HsgnState& explicit_input,
                               const Grid1D& grid, const SchemeParams& params, double tau,
                               const Bathymetry* bathy = nullptr);
inline HsgnState convective_predictor(const HsgnState& state, const Grid1D& grid,
                                      const SchemeParams& params, double tau,
                                      const Bathymetry* bathy = nullptr) {
  return convective_predictor(state, state, grid, params, tau, bathy);
}

// (h eta)* + tau (h w)* + lambda tau^2
std::vector<double> tilde_heta(const std::vector<double>& heta_star,
                               const std::vector<double>& hw_star, double lambda,
                               double tau);

// Linearised depth problem with coefficients frozen at `coeff_state`. `star`
// must have ghosts filled. Throws CoercivityViolation when kappa <= 0.
DepthSystem assemble_depth_system(const HsgnState& coeff_state, const HsgnState& star,
                                  const Grid1D& grid, const SchemeParams& params,
                                  double tau);

// Completes the stage from the interior depths `h_new` (length n_cells).
HsgnState back_substitute(const std::vector<double>& h_new, const ImplicitStageWork& work,
                          const Grid1D& grid, const SchemeParams& params, double tau);

struct StageDiagnostics {
  double kappa_min = std::numeric_limits<double>::infinity();
};

// U = base + tau H(explicit_input, U): predictor, depth solve, back-substitution.
HsgnState implicit_stage(const HsgnState& base, const HsgnState& explicit_input,
                         const Grid1D& grid, const SchemeParams& params, double tau,
                         const Bathymetry* bathy = nullptr,
                         StageDiagnostics* diag = nullptr);

// Single stage with tau = dt.
HsgnState si_step_order1(const HsgnState& state, const Grid1D& grid,
                         const SchemeParams& params, double dt,
                         const Bathymetry* bathy = nullptr,
                         StageDiagnostics* diag = nullptr);

HsgnState imex_rk2_step(const HsgnState& state, const Grid1D& grid,
                        const SchemeParams& params, double dt,
                        const Bathymetry* bathy = nullptr,
                        StageDiagnostics* diag = nullptr);

struct SiStepSize {
  double dt = 0.0;
  double mu_max = 0.0;
  double u_max = 0.0;
  bool material_limited = false;
};

// dt = CFL dx / mu_max, cut back to mcfl_limit dx / u_max when the material
// Courant number would exceed the limit.
SiStepSize si_step_size(const HsgnState& state, const Grid1D& grid,
                        const SchemeParams& params, const Bathymetry* bathy = nullptr);
inline double si_dt(const HsgnState& state, const Grid1D& grid, const SchemeParams& params,
                    const Bathymetry* bathy = nullptr) {
  return si_step_size(state, grid, params, bathy).dt;
}

struct SiResult {
  HsgnState state;
  RunReport report;
};

SiResult run_si(const HsgnState& initial, const Grid1D& grid, const SchemeParams& params,
                const Bathymetry* bathy = nullptr, const RunOptions& options = {});

}  // namespace sgn::si_hsgn
