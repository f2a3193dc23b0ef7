#pragma once

#include "sgn/core.hpp"
#include "sgn/run_report.hpp"

namespace sgn::explicit_hsgn {

// Dissipation speed of the Rusanov fluxes. `Material` uses |u| only;
// `Spectral` uses |u| + c and also upwinds the mass flux.
enum class RusanovSpeed { Material, Spectral };

const char* to_string(RusanovSpeed s);
RusanovSpeed parse_rusanov_speed(const std::string& name);

struct ExplicitStepperConfig {
  int order = 2;
  double cfl = 0.4;
  bool bathymetric = false;
  RusanovSpeed speed = RusanovSpeed::Spectral;

  static ExplicitStepperConfig from(const SchemeParams& params, const Bathymetry* bathy);
  void validate() const;
};

struct ExplicitResult {
  HsgnState state;
  RunReport report;
};

// CFL * dx / max(|u| + c). Throws DryBed on a dry cell.
double explicit_dt(const HsgnState& state, const Grid1D& grid, const SchemeParams& params,
                   const Bathymetry* bathy = nullptr);

// Semi-discrete right-hand side L(U); `state` must have its ghosts filled.
HsgnState explicit_rhs(const HsgnState& state, const Grid1D& grid,
                       const SchemeParams& params, const ExplicitStepperConfig& cfg,
                       const Bathymetry* bathy = nullptr);

HsgnState explicit_step_order1(const HsgnState& state, const Grid1D& grid,
                               const SchemeParams& params, double dt,
                               const Bathymetry* bathy = nullptr,
                               RusanovSpeed speed = RusanovSpeed::Spectral);

// Heun: U1 = U + dt L(U); U^{n+1} = U/2 + (U1 + dt L(U1))/2.
HsgnState explicit_step_order2(const HsgnState& state, const Grid1D& grid,
                               const SchemeParams& params, double dt,
                               const Bathymetry* bathy = nullptr,
                               RusanovSpeed speed = RusanovSpeed::Spectral);

ExplicitResult run_explicit(const HsgnState& initial, const Grid1D& grid,
                            const SchemeParams& params, const Bathymetry* bathy = nullptr,
                            const RunOptions& options = {},
                            RusanovSpeed speed = RusanovSpeed::Spectral);

// Interior profiles (x, h, u, eta, w, b) of a relaxation-system state.
void fill_profiles(RunReport& report, const HsgnState& state, const Grid1D& grid,
                   const Bathymetry* bathy);

}  // namespace sgn::explicit_hsgn
