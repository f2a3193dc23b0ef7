#include "sgn/explicit_solver.hpp"

#include <algorithm>
#include <cmath>

#include "hsgn_fluxes.hpp"
#include "sgn/hsgn_model.hpp"
#include "sgn/spatial_ops.hpp"
#include "time_loop.hpp"

namespace sgn::explicit_hsgn {

const char* to_string(RusanovSpeed s) {
  return s == RusanovSpeed::Material ? "material" : "spectral";
}

RusanovSpeed parse_rusanov_speed(const std::string& name) {
  if (name == "material") return RusanovSpeed::Material;
  if (name == "spectral") return RusanovSpeed::Spectral;
  throw Error(ErrorCode::InvalidArgument, "unknown Rusanov speed '" + name + "'");
}

ExplicitStepperConfig ExplicitStepperConfig::from(const SchemeParams& params,
                                                  const Bathymetry* bathy) {
  ExplicitStepperConfig cfg;
  cfg.order = params.order;
  cfg.cfl = params.cfl;
  cfg.bathymetric = bathy != nullptr && !bathy->empty();
  return cfg;
}

void ExplicitStepperConfig::validate() const {
  if (order != 1 && order != 2) throw Error(ErrorCode::InvalidArgument, "order must be 1 or 2");
  if (!(cfl > 0.0)) throw Error(ErrorCode::InvalidArgument, "explicit CFL must be positive");
}

namespace {

const Bathymetry* active(const Bathymetry* bathy) {
  return bathy != nullptr && !bathy->empty() ? bathy : nullptr;
}

}  // namespace

double explicit_dt(const HsgnState& s, const Grid1D& grid, const SchemeParams& params,
                   const Bathymetry* bathy) {
  bathy = active(bathy);
  check_wet(s.h, grid, params.h_min, "explicit_dt");
  double mu = 0.0;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    const double u = s.q[i] / s.h[i];
    const double eta = detail::cell_eta(s, bathy, i);
    mu = std::max(mu, std::abs(u) + hsgn::celerity(s.h[i], eta, params.g, params.lambda));
  }
  return params.cfl * grid.dx / mu;
}

HsgnState explicit_rhs(const HsgnState& s, const Grid1D& grid, const SchemeParams& params,
                       const ExplicitStepperConfig& cfg, const Bathymetry* bathy) {
  bathy = active(bathy);
  const std::size_t n = grid.size();
  const double g = params.g;
  const double lambda = params.lambda;
  const auto speed = cfg.speed == RusanovSpeed::Material ? detail::FaceSpeed::Material
                                                         : detail::FaceSpeed::Spectral;
  const auto conv = detail::convective_divergence(s, grid, cfg.order, params.minmod_limiter,
                                                  speed, g, lambda, bathy);

  // true h*eta at every storage cell, for the central pressure term
  std::vector<double> h_eta(n);
  for (std::size_t i = 0; i < n; ++i) {
    h_eta[i] = bathy ? s.heta[i] - 1.5 * bathy->b[i] * s.h[i] : s.heta[i];
  }
  const std::vector<double> dq = central_flux_diff(s.q, grid.dx);
  const std::vector<double> dh = central_flux_diff(s.h, grid.dx);
  // (h eta)_x = (h eta - h^2)_x + 2 h h_x: differencing h^2 directly leaves an
  // O(lambda dx^2) force on relaxed states, which grows with lambda.
  std::vector<double> defect(n);
  for (std::size_t i = 0; i < n; ++i) defect[i] = h_eta[i] - s.h[i] * s.h[i];
  const std::vector<double> dheta = central_flux_diff(defect, grid.dx);

  HsgnState rhs(n);
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    const double h = s.h[i];
    const double eta = h_eta[i] / h;
    const double r = eta / h;
    const double c2 = g * h + (lambda / 3.0) * r * r;
    const double alpha = -(2.0 * r - 1.0) / (3.0 * h);
    const double a2 = c2 - lambda * eta * alpha;

    rhs.h[i] = cfg.speed == RusanovSpeed::Spectral ? -conv.mass[i] : -dq[i];
    rhs.q[i] = -conv.q[i] - (a2 + 2.0 * lambda * alpha * h) * dh[i] - lambda * alpha * dheta[i];
    if (bathy) {
      const double p_tilde = (lambda / 3.0) * (1.0 - r);
      rhs.q[i] -= (g * h + 1.5 * p_tilde) * bathy->b_x[i];
    }
    rhs.heta[i] = -conv.heta[i] + s.hw[i];
    rhs.hw[i] = -conv.hw[i] - lambda * (r - 1.0);
  }
  return rhs;
}

namespace {

HsgnState axpy(const HsgnState& x, double a, const HsgnState& y, const Grid1D& grid) {
  HsgnState out = x;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    out.h[i] += a * y.h[i];
    out.q[i] += a * y.q[i];
    out.heta[i] += a * y.heta[i];
    out.hw[i] += a * y.hw[i];
  }
  return out;
}

ExplicitStepperConfig config_for(const SchemeParams& params, const Bathymetry* bathy,
                                 int order, RusanovSpeed speed) {
  ExplicitStepperConfig cfg = ExplicitStepperConfig::from(params, bathy);
  cfg.order = order;
  cfg.speed = speed;
  return cfg;
}

}  // namespace

HsgnState explicit_step_order1(const HsgnState& state, const Grid1D& grid,
                               const SchemeParams& params, double dt,
                               const Bathymetry* bathy, RusanovSpeed speed) {
  const auto cfg = config_for(params, bathy, 1, speed);
  HsgnState u = state;
  apply_boundary(u, grid, params.boundary);
  HsgnState next = axpy(u, dt, explicit_rhs(u, grid, params, cfg, bathy), grid);
  apply_boundary(next, grid, params.boundary);
  check_wet(next.h, grid, params.h_min, "explicit_step_order1");
  return next;
}

HsgnState explicit_step_order2(const HsgnState& state, const Grid1D& grid,
                               const SchemeParams& params, double dt,
                               const Bathymetry* bathy, RusanovSpeed speed) {
  const auto cfg = config_for(params, bathy, 2, speed);
  HsgnState u = state;
  apply_boundary(u, grid, params.boundary);
  HsgnState u1 = axpy(u, dt, explicit_rhs(u, grid, params, cfg, bathy), grid);
  apply_boundary(u1, grid, params.boundary);
  check_wet(u1.h, grid, params.h_min, "explicit_step_order2 (stage 1)");
  const HsgnState l1 = explicit_rhs(u1, grid, params, cfg, bathy);
  HsgnState next = u;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    next.h[i] = 0.5 * u.h[i] + 0.5 * (u1.h[i] + dt * l1.h[i]);
    next.q[i] = 0.5 * u.q[i] + 0.5 * (u1.q[i] + dt * l1.q[i]);
    next.heta[i] = 0.5 * u.heta[i] + 0.5 * (u1.heta[i] + dt * l1.heta[i]);
    next.hw[i] = 0.5 * u.hw[i] + 0.5 * (u1.hw[i] + dt * l1.hw[i]);
  }
  apply_boundary(next, grid, params.boundary);
  check_wet(next.h, grid, params.h_min, "explicit_step_order2");
  return next;
}

void fill_profiles(RunReport& report, const HsgnState& s, const Grid1D& grid,
                   const Bathymetry* bathy) {
  bathy = active(bathy);
  report.x.clear();
  report.h.clear();
  report.u.clear();
  report.eta.clear();
  report.w.clear();
  report.b.clear();
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    report.x.push_back(grid.cell_centers[i]);
    report.h.push_back(s.h[i]);
    report.u.push_back(s.q[i] / s.h[i]);
    report.eta.push_back(detail::cell_eta(s, bathy, i));
    report.w.push_back(s.hw[i] / s.h[i]);
    report.b.push_back(bathy ? bathy->b[i] : 0.0);
  }
}

ExplicitResult run_explicit(const HsgnState& initial, const Grid1D& grid,
                            const SchemeParams& params_in, const Bathymetry* bathy,
                            const RunOptions& options, RusanovSpeed speed) {
  params_in.validate();
  SchemeParams params = params_in;
  if (!options.abort_on_dry) params.h_min = -std::numeric_limits<double>::infinity();
  bathy = active(bathy);

  ExplicitResult result;
  result.report.solver = "explicit-hsgn";
  auto dt_of = [&](const HsgnState& s) {
    detail::StepSize ss;
    double mu = 0.0, u_max = 0.0;
    for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
      const double h = s.h[i];
      const double u = std::abs(s.q[i] / h);
      const double r = detail::cell_eta(s, bathy, i) / h;
      mu = std::max(mu, u + std::sqrt(std::abs(params.g * h + (params.lambda / 3.0) * r * r)));
      u_max = std::max(u_max, u);
    }
    ss.fastest = mu;
    ss.u_max = u_max;
    ss.dt = params.cfl * grid.dx / mu;
    return ss;
  };
  auto step = [&](const HsgnState& s, double dt, detail::StepInfo&) {
    return params.order == 1 ? explicit_step_order1(s, grid, params, dt, bathy, speed)
                             : explicit_step_order2(s, grid, params, dt, bathy, speed);
  };
  result.state = detail::time_loop(initial, grid, params, bathy, options, result.report,
                                   dt_of, step);
  result.report.notes.push_back(std::string("rusanov speed: ") + to_string(speed));
  fill_profiles(result.report, result.state, grid, bathy);
  return result;
}

}  // namespace sgn::explicit_hsgn
