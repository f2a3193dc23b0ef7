#include "sgn/si_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsgn_fluxes.hpp"
#include "sgn/explicit_solver.hpp"
#include "sgn/hsgn_model.hpp"
#include "time_loop.hpp"

// Bathymetric runs store h*(eta + 1.5 b) in `heta`. Inside a stage we switch to
// the true h*eta, whose transport picks up the explicit source -1.5 q b_x; the
// pressure and the relaxation closure are then exactly the flat ones, so the
// implicit chain needs no bathymetric terms. (gh + 1.5 p~) b_x stays explicit.

namespace sgn::si_hsgn {

ImexTableau ImexTableau::standard() {
  ImexTableau t;
  t.gamma = 1.0 - 1.0 / std::sqrt(2.0);
  t.c_coef = 1.0 / (2.0 * t.gamma);
  t.a_explicit = {{{0.0, 0.0}, {t.c_coef, 0.0}}};
  t.a_implicit = {{{t.gamma, 0.0}, {1.0 - t.gamma, t.gamma}}};
  t.b_explicit = {1.0 - t.gamma, t.gamma};
  t.b_implicit = {1.0 - t.gamma, t.gamma};
  return t;
}

std::array<double, 2> ImexTableau::c_explicit() const {
  return {a_explicit[0][0] + a_explicit[0][1], a_explicit[1][0] + a_explicit[1][1]};
}

std::array<double, 2> ImexTableau::c_implicit() const {
  return {a_implicit[0][0] + a_implicit[0][1], a_implicit[1][0] + a_implicit[1][1]};
}

double ImexTableau::order_condition_defect() const {
  const auto ce = c_explicit();
  const auto ci = c_implicit();
  const double d[] = {
      std::abs(b_explicit[0] + b_explicit[1] - 1.0),
      std::abs(b_implicit[0] + b_implicit[1] - 1.0),
      std::abs(b_explicit[0] * ce[0] + b_explicit[1] * ce[1] - 0.5),
      std::abs(b_implicit[0] * ci[0] + b_implicit[1] * ci[1] - 0.5),
  };
  return *std::max_element(std::begin(d), std::end(d));
}

bool ImexTableau::stiffly_accurate() const {
  return a_implicit[1][0] == b_implicit[0] && a_implicit[1][1] == b_implicit[1];
}

namespace {

const Bathymetry* active(const Bathymetry* bathy) {
  return bathy != nullptr && !bathy->empty() ? bathy : nullptr;
}

// evolved <-> true h*eta over all storage cells
HsgnState to_true_heta(HsgnState s, const Bathymetry* bathy) {
  if (bathy) {
    for (std::size_t i = 0; i < s.size(); ++i) s.heta[i] -= 1.5 * bathy->b[i] * s.h[i];
  }
  return s;
}

HsgnState to_evolved_heta(HsgnState s, const Bathymetry* bathy) {
  if (bathy) {
    for (std::size_t i = 0; i < s.size(); ++i) s.heta[i] += 1.5 * bathy->b[i] * s.h[i];
  }
  return s;
}

// Predictor on true-heta states.
HsgnState predictor_true(const HsgnState& base, const HsgnState& expl, const Grid1D& grid,
                         const SchemeParams& params, double tau, const Bathymetry* bathy) {
  const auto conv = detail::convective_divergence(expl, grid, params.order,
                                                  params.minmod_limiter,
                                                  detail::FaceSpeed::Material, params.g,
                                                  params.lambda, nullptr);
  HsgnState star = base;
  // Central differences leave (h, q) checkerboards neutral and the extrapolated
  // stage-2 input pumps them; the mass equation gets the same |u| dissipation
  // as the other components, its central part staying implicit.
  const std::vector<double> dq_central = central_flux_diff(expl.q, grid.dx);
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    star.h[i] = base.h[i] - tau * (conv.mass[i] - dq_central[i]);
    star.q[i] = base.q[i] - tau * conv.q[i];
    star.heta[i] = base.heta[i] - tau * conv.heta[i];
    star.hw[i] = base.hw[i] - tau * conv.hw[i];
    if (bathy) {
      const double h = expl.h[i];
      const double eta = expl.heta[i] / h;
      const double p_tilde = hsgn::bathy_p_tilde(h, eta, params.lambda);
      star.q[i] -= tau * (params.g * h + 1.5 * p_tilde) * bathy->b_x[i];
      star.heta[i] -= tau * 1.5 * expl.q[i] * bathy->b_x[i];
    }
  }
  apply_boundary(star, grid, params.boundary);
  return star;
}

}  // namespace

HsgnState convective_predictor(const HsgnState& base, const HsgnState& explicit_input,
                               const Grid1D& grid, const SchemeParams& params, double tau,
                               const Bathymetry* bathy) {
  bathy = active(bathy);
  HsgnState b = base;
  HsgnState e = explicit_input;
  apply_boundary(b, grid, params.boundary);
  apply_boundary(e, grid, params.boundary);
  check_wet(e.h, grid, params.h_min, "convective_predictor");
  const HsgnState star =
      predictor_true(to_true_heta(b, bathy), to_true_heta(e, bathy), grid, params, tau, bathy);
  return to_evolved_heta(star, bathy);
}

std::vector<double> tilde_heta(const std::vector<double>& heta_star,
                               const std::vector<double>& hw_star, double lambda,
                               double tau) {
  std::vector<double> out(heta_star.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = heta_star[i] + tau * hw_star[i] + lambda * tau * tau;
  }
  return out;
}

namespace {

// Jump of (h eta)+ between cells a and b as it enters lambda delta D_x(h eta).
// (h eta)+ = d + (h*)^2 + lambda tau^2 with d the predictor defect; the (h*)^2
// part is differenced through its chain rule 2 h* (h*)_x with h* at the stencil
// centre. Differencing (h*)^2 directly leaves an O(lambda dx^2) pressure error
// on relaxed states, which grows with lambda on a fixed mesh.
double relaxation_jump(const ImplicitStageWork& w, std::size_t a, std::size_t b, double h_centre) {
  return (w.defect[b] - w.defect[a]) + 2.0 * h_centre * (w.h_star[b] - w.h_star[a]);
}

// Wide stencil at a physical edge. The semi-discrete system is
//   h_i + c (qbar_{i+1} - qbar_{i-1}) = h*_i,
//   qbar_j = Q_j - c kappa_j (h_{j+1} - h_{j-1}),  c = tau / (2 dx),
// with Q_j = q+_j - lambda c delta_j (he_{j+1} - he_{j-1}); ghost depths and
// fluxes follow the same rules apply_boundary uses, so back_substitute
// reproduces qbar exactly.
void assemble_wide_banded(DepthSystem& out, const HsgnState& star, const Grid1D& grid,
                          const SchemeParams& params, double tau) {
  ImplicitStageWork& w = out.work;
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(grid.n_cells);
  const std::ptrdiff_t ng = static_cast<std::ptrdiff_t>(grid.n_ghost);
  const double c = tau / (2.0 * grid.dx);
  const bool wall = params.boundary == Boundary::Reflective;
  const double q_parity = wall ? -1.0 : 1.0;
  auto mirror = [&](std::ptrdiff_t j) -> std::ptrdiff_t {
    if (j < 0) return wall ? -j - 1 : 0;
    if (j >= m) return wall ? 2 * m - 1 - j : m - 1;
    return j;
  };

  BandedSystem sys(grid.n_cells, 2, 2);
  // adds sign * c * qbar_j to row i
  auto add_flux = [&](std::ptrdiff_t i, std::ptrdiff_t j, double sign) {
    if (j < 0 || j >= m) {
      sign *= q_parity;
      j = mirror(j);
    }
    const std::size_t s = static_cast<std::size_t>(j + ng);
    const double Q = w.q_dagger[s] -
                     params.lambda * c * w.delta[s] * relaxation_jump(w, s - 1, s + 1, w.h_star[s]);
    const auto row = static_cast<std::size_t>(i);
    const auto jp = static_cast<std::size_t>(mirror(j + 1));
    const auto jm = static_cast<std::size_t>(mirror(j - 1));
    const double k = sign * c * c * w.kappa[s];
    // residual of h* in the same difference form
    sys.rhs[row] += -sign * c * Q + k * (star.h[jp + grid.n_ghost] - star.h[jm + grid.n_ghost]);
    sys.at(row, jp) -= k;
    sys.at(row, jm) += k;
  };
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto row = static_cast<std::size_t>(i);
    sys.at(row, row) += 1.0;
    add_flux(i, i + 1, 1.0);
    add_flux(i, i - 1, -1.0);
  }
  for (std::size_t k = 0; k < grid.n_cells; ++k) {
    w.h_dagger[k + grid.n_ghost] = star.h[k + grid.n_ghost] + sys.rhs[k];
  }
  out.banded = std::move(sys);
}

}  // namespace

DepthSystem assemble_depth_system(const HsgnState& coeff, const HsgnState& star,
                                  const Grid1D& grid, const SchemeParams& params,
                                  double tau) {
  const std::size_t n = grid.size();
  const double lambda = params.lambda;
  const double lt2 = lambda * tau * tau;

  DepthSystem out;
  ImplicitStageWork& w = out.work;
  w.hw_dagger.resize(n);
  w.heta_dagger.resize(n);
  w.q_dagger = star.q;
  w.beta1.resize(n);
  w.beta2.resize(n);
  w.kappa.resize(n);
  w.delta.resize(n);
  w.alpha.resize(n);
  w.h_dagger.assign(n, 0.0);
  w.heta_star = star.heta;
  w.hw_star = star.hw;
  w.h_star = star.h;
  w.defect.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.defect[i] = (star.heta[i] - star.h[i] * star.h[i]) + tau * star.hw[i];
  }

  for (std::size_t i = 0; i < n; ++i) {
    w.hw_dagger[i] = star.hw[i] + lambda * tau;
    w.heta_dagger[i] = star.heta[i] + tau * w.hw_dagger[i];

    const double h = coeff.h[i];
    if (!(h > 0.0)) {
      std::ostringstream msg;
      msg << "assemble_depth_system: depth " << h << " at storage cell " << i;
      throw Error(ErrorCode::DryBed, msg.str());
    }
    const double eta = coeff.heta[i] / h;
    const auto c = hsgn::pressure_gradient_coeffs(h, eta, params.g, lambda);
    w.alpha[i] = c.alpha;
    w.beta1[i] = 1.0 + lt2 / (h * h);
    w.beta2[i] = 2.0 * lt2 / (w.beta1[i] * w.beta1[i] * h * h * h);
    w.kappa[i] = c.a2 + lambda * c.alpha * w.beta2[i] * w.heta_dagger[i];
    w.delta[i] = c.alpha / w.beta1[i];
  }

  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    if (w.kappa[i] < w.kappa_min) {
      w.kappa_min = w.kappa[i];
      w.kappa_argmin = i - grid.n_ghost;
    }
  }
  if (!(w.kappa_min > 0.0)) {
    std::ostringstream msg;
    msg << "depth operator not coercive: kappa = " << w.kappa_min << " at cell "
        << w.kappa_argmin << " (x = " << grid.center(w.kappa_argmin) << ")";
    throw Error(ErrorCode::CoercivityViolation, msg.str());
  }

  const std::size_t m = grid.n_cells;
  const std::size_t ng = grid.n_ghost;
  const bool periodic = params.boundary == Boundary::Periodic;
  const bool wide = params.si_stencil == SiStencil::Wide;
  out.n_cells = m;
  out.h_base.assign(star.h.begin() + static_cast<std::ptrdiff_t>(ng),
                    star.h.begin() + static_cast<std::ptrdiff_t>(ng + m));
  if (wide && !periodic) {
    assemble_wide_banded(out, star, grid, params, tau);
    return out;
  }

  const std::size_t stride = wide ? 2 : 1;
  const double span = static_cast<double>(stride) * grid.dx;
  const double r = tau * tau / (span * span);
  const double relax = lt2 / (span * span);

  // face coefficients between cell i and i +- stride
  auto face = [&](const std::vector<double>& c, std::size_t i, bool plus) {
    const std::size_t j = plus ? i + 1 : i - 1;
    return wide ? c[j] : 0.5 * (c[i] + c[j]);
  };
  auto jump = [&](std::size_t a, std::size_t b) {
    return relaxation_jump(w, a, b, wide ? star.h[a + 1] : 0.5 * (star.h[a] + star.h[b]));
  };
  // h+ - h* and the residual of h* (ghosts of star.h realise the end folds
  // and the periodic wrap)
  std::vector<double> rhs(n, 0.0);
  const auto& hs = star.h;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    const double dh = -tau / (2.0 * grid.dx) * (w.q_dagger[i + 1] - w.q_dagger[i - 1]) +
                      relax * (face(w.delta, i, true) * jump(i, i + stride) -
                               face(w.delta, i, false) * jump(i - stride, i));
    w.h_dagger[i] = hs[i] + dh;
    rhs[i] = dh + r * (face(w.kappa, i, true) * (hs[i + stride] - hs[i]) -
                       face(w.kappa, i, false) * (hs[i] - hs[i - stride]));
  }

  std::vector<bool> used(m, false);
  for (std::size_t start = 0; start < m; ++start) {
    if (used[start]) continue;
    DepthChain chain;
    for (std::size_t c = start; c < m && !used[c];) {
      used[c] = true;
      chain.cells.push_back(c);
      c = periodic ? (c + stride) % m : c + stride;
    }
    const std::size_t len = chain.cells.size();
    TridiagonalSystem& sys = chain.system;
    sys = TridiagonalSystem(len, periodic);
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = chain.cells[k] + ng;
      const double kp = face(w.kappa, i, true);
      const double km = face(w.kappa, i, false);
      sys.diag[k] = 1.0 + r * (kp + km);
      sys.upper[k] = -r * kp;
      sys.lower[k] = -r * km;
      sys.rhs[k] = rhs[i];
    }
    if (!periodic) {
      // compact stencil: the ghost copies the end cell
      sys.diag[0] += sys.lower[0];
      sys.lower[0] = 0.0;
      sys.diag[len - 1] += sys.upper[len - 1];
      sys.upper[len - 1] = 0.0;
    } else if (len == 2) {
      // both couplings of a two-cell cycle hit the same neighbour
      sys.upper[0] += sys.lower[0];
      sys.lower[0] = 0.0;
      sys.lower[1] += sys.upper[1];
      sys.upper[1] = 0.0;
      sys.periodic = false;
    } else if (len == 1) {
      sys.diag[0] = 1.0;
      sys.upper[0] = sys.lower[0] = 0.0;
      sys.periodic = false;
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

std::vector<double> solve_depth_system(const DepthSystem& ds) {
  std::vector<double> h = ds.h_base;
  h.resize(ds.n_cells, 0.0);
  if (ds.banded) {
    const std::vector<double> dh = solve_banded(*ds.banded);
    for (std::size_t k = 0; k < dh.size(); ++k) h[k] += dh[k];
    return h;
  }
  for (const auto& chain : ds.chains) {
    const std::vector<double> dh = solve_tridiagonal(chain.system);
    for (std::size_t k = 0; k < dh.size(); ++k) h[chain.cells[k]] += dh[k];
  }
  return h;
}

HsgnState back_substitute(const std::vector<double>& h_new, const ImplicitStageWork& w,
                          const Grid1D& grid, const SchemeParams& params, double tau) {
  if (h_new.size() != grid.n_cells) {
    throw Error(ErrorCode::InvalidArgument, "back_substitute: depth vector has wrong length");
  }
  const std::size_t n = grid.size();
  const double lambda = params.lambda;
  HsgnState out(n);
  for (std::size_t k = 0; k < grid.n_cells; ++k) out.h[k + grid.n_ghost] = h_new[k];
  apply_boundary(std::span<double>(out.h), grid, params.boundary, 1.0);
  check_wet(out.h, grid, params.h_min, "back_substitute");

  const double c = tau / (2.0 * grid.dx);
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    const double h = out.h[i];
    out.q[i] = w.q_dagger[i] - c * w.kappa[i] * (out.h[i + 1] - out.h[i - 1]) -
               lambda * c * w.delta[i] * relaxation_jump(w, i - 1, i + 1, w.h_star[i]);
    // he+ / beta1 and hw+ - lambda tau he/h^2, written around the defect
    // he - h^2 so that relaxed states reproduce exactly
    const double beta1 = 1.0 + lambda * tau * tau / (h * h);
    const double d = (w.heta_star[i] - h * h) + tau * w.hw_star[i];
    out.heta[i] = h * h + d / beta1;
    out.hw[i] = w.hw_star[i] - lambda * tau * d / (beta1 * h * h);
  }
  apply_boundary(out, grid, params.boundary);
  return out;
}

HsgnState implicit_stage(const HsgnState& base, const HsgnState& explicit_input,
                         const Grid1D& grid, const SchemeParams& params, double tau,
                         const Bathymetry* bathy, StageDiagnostics* diag) {
  bathy = active(bathy);
  HsgnState b = base;
  HsgnState e = explicit_input;
  apply_boundary(b, grid, params.boundary);
  apply_boundary(e, grid, params.boundary);
  check_wet(e.h, grid, params.h_min, "implicit_stage");
  const HsgnState e_true = to_true_heta(e, bathy);
  const HsgnState star = predictor_true(to_true_heta(b, bathy), e_true, grid, params, tau, bathy);
  const DepthSystem ds = assemble_depth_system(e_true, star, grid, params, tau);
  if (diag) diag->kappa_min = std::min(diag->kappa_min, ds.work.kappa_min);
  const std::vector<double> h_new = solve_depth_system(ds);
  return to_evolved_heta(back_substitute(h_new, ds.work, grid, params, tau), bathy);
}

namespace {
// Conservative fourth-difference filter on the odd-even mode, which the central
// depth operator cannot see. Acts on the free surface and on the relaxation
// defect h eta - h^2, so still water over any bottom is left untouched.
void odd_even_filter(HsgnState& s, const Grid1D& grid, const SchemeParams& params,
                     const Bathymetry* bathy) {
  const double sigma = params.si_filter;
  if (sigma <= 0.0) return;
  std::vector<double> flux(grid.size(), 0.0);
  auto filter = [&](std::vector<double>& v, double parity) {
    apply_boundary(v, grid, params.boundary, parity);
    for (std::size_t i = grid.begin() - 1; i < grid.end(); ++i) {
      flux[i] = v[i + 2] - 3.0 * v[i + 1] + 3.0 * v[i] - v[i - 1];
    }
    for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
      v[i] -= sigma / 16.0 * (flux[i] - flux[i - 1]);
    }
  };
  s = to_true_heta(std::move(s), bathy);
  std::vector<double> defect(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    defect[i] = s.heta[i] - s.h[i] * s.h[i];
    if (bathy) s.h[i] += bathy->b[i];
  }
  filter(s.h, 1.0);
  filter(defect, 1.0);
  filter(s.q, -1.0);
  filter(s.hw, 1.0);
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    if (bathy) s.h[i] -= bathy->b[i];
    s.heta[i] = defect[i] + s.h[i] * s.h[i];
  }
  s = to_evolved_heta(std::move(s), bathy);
  apply_boundary(s, grid, params.boundary);
}
}  // namespace

HsgnState si_step_order1(const HsgnState& state, const Grid1D& grid,
                         const SchemeParams& params, double dt, const Bathymetry* bathy,
                         StageDiagnostics* diag) {
  HsgnState out = implicit_stage(state, state, grid, params, dt, bathy, diag);
  odd_even_filter(out, grid, params, active(bathy));
  return out;
}

HsgnState imex_rk2_step(const HsgnState& state, const Grid1D& grid,
                        const SchemeParams& params, double dt, const Bathymetry* bathy,
                        StageDiagnostics* diag) {
  static const ImexTableau tab = ImexTableau::standard();
  const double gamma = tab.gamma;
  const double tau = gamma * dt;
  HsgnState un = state;
  apply_boundary(un, grid, params.boundary);

  const HsgnState u1 = implicit_stage(un, un, grid, params, tau, bathy, diag);

  // efficient form: both stage-2 inputs are combinations of U^n and U_I^(1)
  const double ce = tab.c_coef / gamma;
  const double ci = (1.0 - gamma) / gamma;
  HsgnState ue2(un.size()), w2(un.size());
  auto combine = [](const std::vector<double>& a, const std::vector<double>& b, double s,
                    std::vector<double>& out) {
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * (b[i] - a[i]);
  };
  combine(un.h, u1.h, ce, ue2.h);
  combine(un.q, u1.q, ce, ue2.q);
  combine(un.heta, u1.heta, ce, ue2.heta);
  combine(un.hw, u1.hw, ce, ue2.hw);
  combine(un.h, u1.h, ci, w2.h);
  combine(un.q, u1.q, ci, w2.q);
  combine(un.heta, u1.heta, ci, w2.heta);
  combine(un.hw, u1.hw, ci, w2.hw);

  // stiffly accurate: U^{n+1} is the last implicit stage
  HsgnState out = implicit_stage(w2, ue2, grid, params, tau, bathy, diag);
  odd_even_filter(out, grid, params, active(bathy));
  return out;
}

SiStepSize si_step_size(const HsgnState& s, const Grid1D& grid, const SchemeParams& params,
                        const Bathymetry* bathy) {
  bathy = active(bathy);
  check_wet(s.h, grid, params.h_min, "si_dt");
  SiStepSize out;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    const double h = s.h[i];
    const double u = std::abs(s.q[i] / h);
    const double eta = detail::cell_eta(s, bathy, i);
    out.mu_max = std::max(out.mu_max, u + hsgn::celerity(h, eta, params.g, params.lambda));
    out.u_max = std::max(out.u_max, u);
  }
  out.dt = params.cfl * grid.dx / out.mu_max;
  if (out.u_max > 0.0 && out.u_max * out.dt / grid.dx > params.mcfl_limit) {
    out.dt = params.mcfl_limit * grid.dx / out.u_max;
    out.material_limited = true;
  }
  return out;
}

SiResult run_si(const HsgnState& initial, const Grid1D& grid, const SchemeParams& params_in,
                const Bathymetry* bathy, const RunOptions& options) {
  params_in.validate();
  SchemeParams params = params_in;
  if (!options.abort_on_dry) params.h_min = -std::numeric_limits<double>::infinity();
  bathy = active(bathy);

  SiResult result;
  result.report.solver = "si-hsgn";
  auto dt_of = [&](const HsgnState& s) {
    const SiStepSize st = si_step_size(s, grid, params, bathy);
    return detail::StepSize{st.dt, st.mu_max, st.u_max};
  };
  auto step = [&](const HsgnState& s, double dt, detail::StepInfo& info) {
    StageDiagnostics diag;
    HsgnState next = params.order == 1 ? si_step_order1(s, grid, params, dt, bathy, &diag)
                                       : imex_rk2_step(s, grid, params, dt, bathy, &diag);
    info.kappa_min = diag.kappa_min;
    return next;
  };
  result.state =
      detail::time_loop(initial, grid, params, bathy, options, result.report, dt_of, step);
  if (bathy) {
    result.report.notes.push_back("bathymetric source terms treated explicitly");
  }
  explicit_hsgn::fill_profiles(result.report, result.state, grid, bathy);
  return result;
}

}  // namespace sgn::si_hsgn
