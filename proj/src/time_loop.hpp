#pragma once

// Shared time loop for the three solvers (private header).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "sgn/core.hpp"
#include "sgn/run_report.hpp"

namespace sgn::detail {

struct StepSize {
  double dt = 0.0;
  double fastest = 0.0;  // fastest signal speed used for the CFL number
  double u_max = 0.0;
};

struct StepInfo {
  double kappa_min = std::numeric_limits<double>::quiet_NaN();
};

inline double max_interior(const std::vector<double>& v, const Grid1D& grid) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) m = std::max(m, v[i]);
  return m;
}

// `dt_of(state)` -> StepSize, `step(state, dt, info)` -> State.
template <class State, class DtFn, class StepFn>
State time_loop(State state, const Grid1D& grid, const SchemeParams& params,
                const Bathymetry* bathy, const RunOptions& options, RunReport& report,
                DtFn&& dt_of, StepFn&& step) {
  apply_boundary(state, grid, params.boundary);
  report.mass_initial = total_mass(state, grid);
  report.gauges = make_gauges(options.gauges);
  record_gauges(report.gauges, grid, state.h, bathy, 0.0);

  double t = 0.0;
  std::size_t steps = 0;
  const auto start = std::chrono::steady_clock::now();
  while (t < params.t_final && (options.max_steps == 0 || steps < options.max_steps)) {
    StepSize ss = dt_of(state);
    double dt = ss.dt;
    bool last = false;
    if (t + dt >= params.t_final) {
      dt = params.t_final - t;
      last = true;
    }
    StepInfo info;
    state = step(state, dt, info);
    t = last ? params.t_final : t + dt;
    ++steps;

    check_finite(state, grid, report.solver.c_str());
    const double h_max = max_interior(state.h, grid);
    if (h_max > options.blowup_depth) {
      std::ostringstream msg;
      msg << report.solver << ": max depth " << h_max << " exceeds "
          << options.blowup_depth << " at t = " << t;
      throw Error(ErrorCode::Diverged, msg.str());
    }
    record_gauges(report.gauges, grid, state.h, bathy, t);
    const double cfl = dt * ss.fastest / grid.dx;
    const double mcfl = dt * ss.u_max / grid.dx;
    report.max_cfl = std::max(report.max_cfl, cfl);
    report.max_mcfl = std::max(report.max_mcfl, mcfl);
    if (!std::isnan(info.kappa_min)) {
      report.kappa_min = std::min(report.kappa_min, info.kappa_min);
    }
    if (options.record_trace) {
      report.trace.push_back(
          StepTrace{t, dt, cfl, mcfl, total_mass(state, grid), info.kappa_min});
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_time = std::chrono::duration<double>(stop - start).count();
  report.step_count = steps;
  report.t_final = t;
  report.mass_final = total_mass(state, grid);
  return state;
}

}  // namespace sgn::detail
