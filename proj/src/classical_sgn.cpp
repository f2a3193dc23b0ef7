#include "sgn/classical_sgn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "time_loop.hpp"

namespace sgn::classical {

namespace {

const Bathymetry* active(const Bathymetry* bathy) {
  return bathy != nullptr && !bathy->empty() ? bathy : nullptr;
}

}  // namespace

PhiSystem assemble_phi_system(const SwState& s, const Grid1D& grid,
                              const SchemeParams& params, const Bathymetry* bathy) {
  bathy = active(bathy);
  const std::size_t n = grid.n_cells;
  const std::size_t N = grid.size();
  const double dx = grid.dx;
  const double g = params.g;

  std::vector<double> u(N), h3(N), zeta(N);
  for (std::size_t i = 0; i < N; ++i) {
    u[i] = s.q[i] / s.h[i];
    h3[i] = s.h[i] * s.h[i] * s.h[i];
    zeta[i] = bathy ? s.h[i] + bathy->b[i] : s.h[i];
  }
  // (h^3/3)(g zeta_xx + 2 u_x^2) + rho at storage cell j (needs j +- 1)
  auto G = [&](std::size_t j) {
    const double zxx = (zeta[j + 1] - 2.0 * zeta[j] + zeta[j - 1]) / (dx * dx);
    const double ux = (u[j + 1] - u[j - 1]) / (2.0 * dx);
    double v = (h3[j] / 3.0) * (g * zxx + 2.0 * ux * ux);
    if (bathy) {
      const double zx = (zeta[j + 1] - zeta[j - 1]) / (2.0 * dx);
      const double h = s.h[j];
      v += -(h * h * bathy->b_x[j] / 2.0) * g * zx + h3[j] * u[j] * u[j] * bathy->b_xx[j];
    }
    return v;
  };

  PhiSystem out;
  out.system = TridiagonalSystem(n, params.boundary == Boundary::Periodic);
  auto& sys = out.system;
  const double c = 1.0 / (3.0 * dx * dx);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = k + grid.n_ghost;
    const double h = s.h[i];
    const double fm = 0.5 * (h3[i - 1] + h3[i]);
    const double fp = 0.5 * (h3[i] + h3[i + 1]);
    double kappa = 0.0;
    double rhs = -(G(i + 1) - G(i - 1)) / (2.0 * dx);
    if (bathy) {
      const double hm = s.h[i - 1], hp = s.h[i + 1];
      const double bx = bathy->b_x[i];
      kappa = (hp * hp * bathy->b_x[i + 1] - hm * hm * bathy->b_x[i - 1]) / (4.0 * dx) +
              0.75 * h * bx * bx;
      const double zx = (zeta[i + 1] - zeta[i - 1]) / (2.0 * dx);
      const double zxx = (zeta[i + 1] - 2.0 * zeta[i] + zeta[i - 1]) / (dx * dx);
      const double ux = (u[i + 1] - u[i - 1]) / (2.0 * dx);
      const double Q = 0.5 * h * g * zxx - 0.75 * g * bx * zx + h * ux * ux +
                       1.5 * h * u[i] * u[i] * bathy->b_xx[i];
      rhs -= h * Q * bx;
    }
    sys.lower[k] = -c * fm;
    sys.upper[k] = -c * fp;
    sys.diag[k] = h + c * (fm + fp) + kappa;
    sys.rhs[k] = rhs;
    out.margin = std::min(out.margin, (h + kappa) / h);
  }
  // ghost phi = +-phi of the end cell folds into the diagonal
  if (params.boundary != Boundary::Periodic) {
    const double parity = params.boundary == Boundary::Reflective ? -1.0 : 1.0;
    sys.diag[0] += parity * sys.lower[0];
    sys.lower[0] = 0.0;
    sys.diag[n - 1] += parity * sys.upper[n - 1];
    sys.upper[n - 1] = 0.0;
  }
  return out;
}

std::vector<double> solve_phi(const SwState& state, const Grid1D& grid,
                              const SchemeParams& params, const Bathymetry* bathy,
                              double* margin) {
  const PhiSystem ps = assemble_phi_system(state, grid, params, bathy);
  if (!(ps.margin > 0.0)) {
    std::ostringstream msg;
    msg << "phi operator lost diagonal dominance: min (h + kappa)/h = " << ps.margin;
    throw Error(ErrorCode::CoercivityViolation, msg.str());
  }
  if (margin) *margin = std::min(*margin, ps.margin);
  const std::vector<double> x = solve_tridiagonal(ps.system);
  std::vector<double> phi(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.n_cells; ++k) phi[k + grid.n_ghost] = x[k];
  apply_boundary(phi, grid, params.boundary,
                 params.boundary == Boundary::Reflective ? -1.0 : 1.0);
  return phi;
}

std::vector<double> solve_phi_flat(const SwState& state, const Grid1D& grid,
                                   const SchemeParams& params) {
  return solve_phi(state, grid, params, nullptr);
}

std::vector<double> solve_phi_bathy(const SwState& state, const Bathymetry& bathy,
                                    const Grid1D& grid, const SchemeParams& params) {
  return solve_phi(state, grid, params, &bathy);
}

double sgn_sigma_max(const SwState& s, const Grid1D& grid, const SchemeParams& params) {
  double sigma = 0.0;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    sigma = std::max(sigma, std::abs(s.q[i] / s.h[i]) + std::sqrt(params.g * s.h[i]));
  }
  return sigma;
}

double sgn_dt(const SwState& s, const Grid1D& grid, const SchemeParams& params) {
  check_wet(s.h, grid, params.h_min, "sgn_dt");
  return params.cfl * grid.dx / sgn_sigma_max(s, grid, params);
}

namespace {

struct SwFace {
  double h, q, b;
};

// L(U) for the shallow-water part plus sources; `s` has its ghosts filled.
SwState sgn_rhs(const SwState& s, const Bathymetry* bathy, const Grid1D& grid,
                const SchemeParams& params, int order, double* margin) {
  const std::size_t n = grid.size();
  const double g = params.g;
  const std::vector<double> phi = solve_phi(s, grid, params, bathy, margin);
  const FaceValues fh = reconstruct(s.h, grid.dx, order, params.minmod_limiter);
  const FaceValues fq = reconstruct(s.q, grid.dx, order, params.minmod_limiter);
  // The mass dissipation acts on jumps of the free surface h + b, which vanish
  // for still water over any bottom.
  FaceValues fb;
  if (bathy) fb = reconstruct(bathy->b, grid.dx, order, params.minmod_limiter);
  std::vector<SwFace> minus(n), plus(n);
  for (std::size_t f = grid.begin() - 1; f < grid.end(); ++f) {
    minus[f] = SwFace{fh.minus[f], fq.minus[f], bathy ? fb.minus[f] : 0.0};
    plus[f] = SwFace{fh.plus[f], fq.plus[f], bathy ? fb.plus[f] : 0.0};
  }
  auto conserved = [](const SwFace& f) { return std::array<double, 2>{f.h + f.b, f.q}; };
  auto flux = [g](const SwFace& f) {
    return std::array<double, 2>{f.q, f.q * f.q / f.h + 0.5 * g * f.h * f.h};
  };
  auto signal = [g](const SwFace& f) { return std::abs(f.q / f.h) + std::sqrt(g * f.h); };
  auto speed = [&](const SwFace& a, const SwFace& b) { return std::max(signal(a), signal(b)); };
  const auto div = rusanov_flux_diff<2, SwFace>(conserved, flux, speed,
                                                std::span<const SwFace>(minus),
                                                std::span<const SwFace>(plus), grid);
  SwState rhs(n);
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    rhs.h[i] = -div[i][0];
    rhs.q[i] = -div[i][1] + s.h[i] * phi[i];
    if (bathy) rhs.q[i] -= g * s.h[i] * bathy->b_x[i];
  }
  return rhs;
}

}  // namespace

SwState sgn_step(const SwState& state, const Bathymetry* bathy, const Grid1D& grid,
                 const SchemeParams& params, double dt, int order, double* phi_margin) {
  bathy = active(bathy);
  SwState u = state;
  apply_boundary(u, grid, params.boundary);
  const SwState l0 = sgn_rhs(u, bathy, grid, params, order, phi_margin);
  SwState u1 = u;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    u1.h[i] += dt * l0.h[i];
    u1.q[i] += dt * l0.q[i];
  }
  apply_boundary(u1, grid, params.boundary);
  if (order == 1) {
    check_wet(u1.h, grid, params.h_min, "sgn_step");
    return u1;
  }
  check_wet(u1.h, grid, params.h_min, "sgn_step (stage 1)");
  const SwState l1 = sgn_rhs(u1, bathy, grid, params, order, phi_margin);
  SwState next = u;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    next.h[i] = 0.5 * u.h[i] + 0.5 * (u1.h[i] + dt * l1.h[i]);
    next.q[i] = 0.5 * u.q[i] + 0.5 * (u1.q[i] + dt * l1.q[i]);
  }
  apply_boundary(next, grid, params.boundary);
  check_wet(next.h, grid, params.h_min, "sgn_step");
  return next;
}

SgnResult run_sgn(const SwState& initial, const Grid1D& grid, const SchemeParams& params_in,
                  const Bathymetry* bathy, const RunOptions& options) {
  params_in.validate();
  SchemeParams params = params_in;
  if (!options.abort_on_dry) params.h_min = -std::numeric_limits<double>::infinity();
  bathy = active(bathy);

  SgnResult result;
  result.report.solver = "classical-sgn";
  double margin = std::numeric_limits<double>::infinity();
  auto dt_of = [&](const SwState& s) {
    detail::StepSize ss;
    double u_max = 0.0;
    for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
      u_max = std::max(u_max, std::abs(s.q[i] / s.h[i]));
    }
    ss.fastest = sgn_sigma_max(s, grid, params);
    ss.u_max = u_max;
    ss.dt = params.cfl * grid.dx / ss.fastest;
    return ss;
  };
  auto step = [&](const SwState& s, double dt, detail::StepInfo&) {
    return sgn_step(s, bathy, grid, params, dt, params.order, &margin);
  };
  result.state = detail::time_loop(initial, grid, params, bathy, options, result.report,
                                   dt_of, step);
  std::ostringstream note;
  note << "phi diagonal margin min: " << margin;
  result.report.notes.push_back(note.str());
  fill_profiles(result.report, result.state, grid, bathy);
  return result;
}

void fill_profiles(RunReport& report, const SwState& s, const Grid1D& grid,
                   const Bathymetry* bathy) {
  bathy = active(bathy);
  report.x.clear();
  report.h.clear();
  report.u.clear();
  report.eta.clear();
  report.w.clear();
  report.b.clear();
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    const double ux = (s.q[i + 1] / s.h[i + 1] - s.q[i - 1] / s.h[i - 1]) / (2.0 * grid.dx);
    report.x.push_back(grid.cell_centers[i]);
    report.h.push_back(s.h[i]);
    report.u.push_back(s.q[i] / s.h[i]);
    report.eta.push_back(s.h[i]);
    report.w.push_back(-s.h[i] * ux);
    report.b.push_back(bathy ? bathy->b[i] : 0.0);
  }
}

}  // namespace sgn::classical
