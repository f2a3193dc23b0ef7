#include "sgn/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sgn::bench {

double SolitonSpec::kappa_shape() const {
  const double eps = epsilon();
  return std::sqrt(3.0 * eps / (4.0 * h_inf * h_inf * (1.0 + eps)));
}

double SolitonSpec::c_speed(double g) const {
  return std::sqrt(g * h_inf * (1.0 + epsilon()));
}

double FavreSpec::u1(double g) const {
  const double ha = h1();
  return std::sqrt(g * (ha + h0) / (2.0 * h0 * ha)) * (ha - h0);
}

double FavreSpec::physical_time(double T, double g) const { return T * std::sqrt(h0 / g); }

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

PointValue exact_soliton(const SolitonSpec& spec, double x, double t, double g) {
  const double c = spec.c_speed(g);
  const double s = sech(spec.kappa_shape() * (x - spec.x0 - c * t));
  const double h = spec.h_inf * (1.0 + spec.epsilon() * s * s);
  return {h, c * (1.0 - spec.h_inf / h)};
}

double exact_soliton_ux(const SolitonSpec& spec, double x, double t, double g) {
  const double c = spec.c_speed(g);
  const double k = spec.kappa_shape();
  const double xi = k * (x - spec.x0 - c * t);
  const double s = sech(xi);
  const double h = spec.h_inf * (1.0 + spec.epsilon() * s * s);
  const double h_x = -2.0 * k * spec.h_inf * spec.epsilon() * s * s * std::tanh(xi);
  return c * spec.h_inf * h_x / (h * h);
}

HsgnState init_soliton(const SolitonSpec& spec, const Grid1D& grid, double g) {
  HsgnState s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.cell_centers[i];
    const PointValue v = exact_soliton(spec, x, 0.0, g);
    s.h[i] = v.h;
    s.q[i] = v.h * v.u;
    s.heta[i] = v.h * v.h;
    s.hw[i] = v.h * (-v.h * exact_soliton_ux(spec, x, 0.0, g));
  }
  return s;
}

SwState init_soliton_sw(const SolitonSpec& spec, const Grid1D& grid, double g) {
  return to_sw(init_soliton(spec, grid, g));
}

HsgnState init_gaussian_bell(const Grid1D& grid, double /*g*/) {
  HsgnState s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.cell_centers[i];
    const double h = 1.0 + std::exp(-x * x / 20.0);
    s.h[i] = h;
    s.q[i] = 0.0;
    s.heta[i] = h * h;
    s.hw[i] = 0.0;
  }
  return s;
}

namespace {

double hump_bottom(double x) {
  const double h0 = 1.0, a = 1.0;
  return (h0 + a * std::exp(-2.0 * (x + 50.0) * (x + 50.0))) / 20.0;
}

}  // namespace

Scenario init_gaussian_hump(const Grid1D& grid, double /*g*/) {
  Scenario sc;
  sc.bathy = make_bathymetry(grid, hump_bottom);
  sc.state = HsgnState(grid.size());
  const double u = 1e-2;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.cell_centers[i];
    const double b = sc.bathy.b[i];
    const double h = 1.0 + std::exp(-x * x) - b;
    sc.state.h[i] = h;
    sc.state.q[i] = h * u;
    // eta = h, w = -h u_x = 0; the evolved variable is h (eta + 1.5 b)
    sc.state.heta[i] = h * (h + 1.5 * b);
    sc.state.hw[i] = 0.0;
  }
  return sc;
}

Scenario init_lake_at_rest_hump(const Grid1D& grid, double /*g*/) {
  Scenario sc;
  sc.bathy = make_bathymetry(grid, hump_bottom);
  sc.state = HsgnState(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double b = sc.bathy.b[i];
    const double h = 1.0 - b;
    sc.state.h[i] = h;
    sc.state.q[i] = 0.0;
    sc.state.heta[i] = h * (h + 1.5 * b);
    sc.state.hw[i] = 0.0;
  }
  return sc;
}

HsgnState init_favre(const FavreSpec& spec, const Grid1D& grid, double g) {
  HsgnState s(grid.size());
  const double dir = spec.direction >= 0 ? 1.0 : -1.0;
  const double alpha = spec.width();
  const double dh = spec.h1() - spec.h0;
  const double u1 = spec.u1(g);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xi = dir * (grid.cell_centers[i] - spec.x_jump) / alpha;
    const double th = std::tanh(xi);
    const double gsm = 1.0 - th;
    const double gsm_x = -(1.0 - th * th) * dir / alpha;
    const double h = spec.h0 + 0.5 * dh * gsm;
    const double u = dir * 0.5 * u1 * gsm;
    const double u_x = dir * 0.5 * u1 * gsm_x;
    s.h[i] = h;
    s.q[i] = h * u;
    s.heta[i] = h * h;
    s.hw[i] = h * (-h * u_x);
  }
  return s;
}

Scenario init_shelf(const Grid1D& grid, double g) {
  Scenario sc;
  PiecewiseLinear ramp{{{130.0, 0.0}, {140.0, 0.5}}};
  sc.bathy = make_bathymetry(grid, ramp);
  const SolitonSpec soliton{1.0, 0.2, 80.0};
  sc.state = HsgnState(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.cell_centers[i];
    const PointValue v = exact_soliton(soliton, x, 0.0, g);
    const double b = sc.bathy.b[i];
    const double h = v.h - b;
    const double u = v.u;
    const double u_x = exact_soliton_ux(soliton, x, 0.0, g);
    sc.state.h[i] = h;
    sc.state.q[i] = h * u;
    sc.state.heta[i] = h * (h + 1.5 * b);
    sc.state.hw[i] = h * (-h * u_x);
  }
  return sc;
}

PiecewiseLinear DingemansSpec::default_shoal() {
  // 1:20 upslope rising 0.6 m, short plateau, symmetric downslope.
  return PiecewiseLinear{{{11.04, 0.0}, {23.04, 0.6}, {27.04, 0.6}, {39.04, 0.0}}};
}

double DingemansSpec::velocity_amplitude(double g) const {
  return std::sqrt(g / k * std::tanh(k * h0)) * amplitude / h0;
}

Scenario init_dingemans(const DingemansSpec& spec, const Grid1D& grid, double g) {
  Scenario sc;
  const PiecewiseLinear shoal =
      spec.shoal.points.empty() ? DingemansSpec::default_shoal() : spec.shoal;
  sc.bathy = make_bathymetry(grid, shoal);
  sc.gauges = spec.gauges;
  sc.state = HsgnState(grid.size());
  const double pi = std::numbers::pi;
  const double x_lo = -34.5 * pi / spec.k;
  const double x_hi = -8.5 * pi / spec.k;
  const double speed = std::sqrt(g / spec.k * std::tanh(spec.k * spec.h0));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.cell_centers[i];
    const bool in_band = x >= x_lo && x <= x_hi;
    const double z = in_band ? spec.h0 + spec.amplitude * std::cos(spec.k * x) : spec.h0;
    const double z_x = in_band ? -spec.amplitude * spec.k * std::sin(spec.k * x) : 0.0;
    const double b = sc.bathy.b[i];
    const double h = z - b;
    const double u = speed * (z - spec.h0) / spec.h0;
    const double u_x = speed * z_x / spec.h0;
    sc.state.h[i] = h;
    sc.state.q[i] = h * u;
    sc.state.heta[i] = h * (h + 1.5 * b);
    sc.state.hw[i] = h * (-h * u_x);
  }
  return sc;
}

SwState to_sw(const HsgnState& s) {
  SwState out;
  out.h = s.h;
  out.q = s.q;
  return out;
}

HsgnState to_hsgn(const SwState& s, const Grid1D& grid, const Bathymetry* bathy) {
  const std::size_t n = s.size();
  HsgnState out(n);
  const bool has_b = bathy != nullptr && !bathy->empty();
  for (std::size_t i = 0; i < n; ++i) {
    const double h = s.h[i];
    const double b = has_b ? bathy->b[i] : 0.0;
    double u_x = 0.0;
    if (i > 0 && i + 1 < n) {
      u_x = (s.q[i + 1] / s.h[i + 1] - s.q[i - 1] / s.h[i - 1]) / (2.0 * grid.dx);
    }
    out.h[i] = h;
    out.q[i] = s.q[i];
    out.heta[i] = h * (h + 1.5 * b);
    out.hw[i] = -h * h * u_x;
  }
  return out;
}

double l1_error(std::span<const double> num, std::span<const double> exact, double dx) {
  if (num.size() != exact.size()) {
    throw Error(ErrorCode::InvalidArgument, "l1_error: sequences differ in length");
  }
  double diff = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    diff += std::abs(num[i] - exact[i]) * dx;
    norm += std::abs(num[i]) * dx;
  }
  if (norm == 0.0) throw Error(ErrorCode::ZeroNorm, "l1_error: numerical solution has zero norm");
  return diff / norm;
}

namespace {

// Interior index visited j-th when walking from the quiescent end of the domain.
struct Walk {
  std::size_t n;
  int direction;
  std::size_t operator()(std::size_t j) const { return direction > 0 ? n - 1 - j : j; }
};

}  // namespace

BoreExtrema favre_peak_trough(std::span<const double> surface, const Grid1D& /*grid*/,
                              double h0, int direction) {
  const std::size_t n = surface.size();
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "favre_peak_trough: profile too short");
  std::vector<double> e(n);
  for (std::size_t k = 0; k < n; ++k) e[k] = (surface[k] - h0) / h0;
  const Walk at{n, direction};

  // plateau: mean over the far upstream 5% of the domain
  const std::size_t m = std::max<std::size_t>(4, n / 20);
  double plateau = 0.0;
  for (std::size_t j = n - m; j < n; ++j) plateau += e[at(j)];
  plateau /= static_cast<double>(m);

  BoreExtrema out;
  out.plateau = plateau;
  std::size_t j = 1;
  bool found = false;
  for (; j + 1 < n; ++j) {
    const double prev = e[at(j - 1)], cur = e[at(j)], next = e[at(j + 1)];
    if (cur >= prev && cur > next && cur > plateau + 1e-4) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::NoBoreFound,
                "favre_peak_trough: no local maximum rises above the plateau");
  }
  out.peak_index = at(j);
  out.first_peak = e[at(j)];
  for (++j; j + 1 < n; ++j) {
    const double prev = e[at(j - 1)], cur = e[at(j)], next = e[at(j + 1)];
    if (cur <= prev && cur < next) break;
  }
  out.trough_index = at(std::min(j, n - 1));
  out.first_trough = e[out.trough_index];
  return out;
}

double plateau_mean(std::span<const double> surface, const Grid1D& grid, double h0,
                    const BoreExtrema& extrema, double from_depths, double to_depths,
                    int direction) {
  const double dir = direction > 0 ? 1.0 : -1.0;
  const double x_peak = grid.center(extrema.peak_index);
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < surface.size(); ++k) {
    const double behind = dir * (x_peak - grid.center(k)) / h0;
    if (behind >= from_depths && behind <= to_depths) {
      sum += (surface[k] - h0) / h0;
      ++count;
    }
  }
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "plateau_mean: empty window");
  return sum / static_cast<double>(count);
}

}  // namespace sgn::bench
