#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "sgn/core.hpp"

namespace sgn {

struct RunOptions {
  std::vector<double> gauges;  // gauge positions in m
  bool record_trace = true;
  // Disabling the dry-bed abort lets unstable runs continue until they produce
  // non-finite values, which is how instability is detected.
  bool abort_on_dry = true;
  // Abort with ErrorCode::Diverged once max h exceeds this value.
  double blowup_depth = std::numeric_limits<double>::infinity();
  // Stop after this many steps even before t_final (0 = unlimited).
  std::size_t max_steps = 0;
};

struct StepTrace {
  double t = 0.0;
  double dt = 0.0;
  double cfl = 0.0;   // dt * (fastest eigenvalue) / dx
  double mcfl = 0.0;  // dt * max|u| / dx
  double mass = 0.0;
  double kappa_min = std::numeric_limits<double>::quiet_NaN();  // SI only
};

struct RunReport {
  std::string solver;
  // final interior profiles
  std::vector<double> x, h, u, eta, w, b;
  std::vector<GaugeRecord> gauges;
  std::vector<StepTrace> trace;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double kappa_min = std::numeric_limits<double>::infinity();
  double max_cfl = 0.0;
  double max_mcfl = 0.0;
  double t_final = 0.0;
  double wall_time = 0.0;  // seconds spent in the time loop
  std::size_t step_count = 0;
  std::vector<std::string> notes;

  double mass_drift() const {
    return mass_initial != 0.0 ? (mass_final - mass_initial) / mass_initial : 0.0;
  }
  // surface elevation h + b
  std::vector<double> surface() const;
};

namespace detail {

inline std::vector<GaugeRecord> make_gauges(const std::vector<double>& positions) {
  std::vector<GaugeRecord> out;
  out.reserve(positions.size());
  for (double x : positions) out.push_back(GaugeRecord{x, {}, {}});
  return out;
}

inline void record_gauges(std::vector<GaugeRecord>& gauges, const Grid1D& grid,
                          const std::vector<double>& h, const Bathymetry* bathy,
                          double t) {
  for (auto& gauge : gauges) {
    const std::size_t i = grid.nearest_cell(gauge.x_gauge);
    const double b = bathy && !bathy->empty() ? bathy->b[i] : 0.0;
    gauge.times.push_back(t);
    gauge.surface_elevation.push_back(h[i] + b);
  }
}

}  // namespace detail
}  // namespace sgn
