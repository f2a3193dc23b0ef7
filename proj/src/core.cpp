#include "sgn/core.hpp"
#include "sgn/run_report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sgn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidExtent: return "invalid-extent";
    case ErrorCode::NonpositiveDepth: return "nonpositive-depth";
    case ErrorCode::DryBed: return "dry-bed";
    case ErrorCode::SingularPivot: return "singular-pivot";
    case ErrorCode::CoercivityViolation: return "coercivity-violation";
    case ErrorCode::NonFinite: return "non-finite";
    case ErrorCode::Diverged: return "diverged";
    case ErrorCode::ZeroNorm: return "zero-norm";
    case ErrorCode::NoBoreFound: return "no-bore-found";
    case ErrorCode::ConfigParse: return "config-parse";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::Transmissive: return "transmissive";
    case Boundary::Periodic: return "periodic";
    case Boundary::Reflective: return "reflective";
  }
  return "unknown";
}

Boundary parse_boundary(const std::string& name) {
  if (name == "transmissive") return Boundary::Transmissive;
  if (name == "periodic") return Boundary::Periodic;
  if (name == "reflective") return Boundary::Reflective;
  throw Error(ErrorCode::InvalidArgument, "unknown boundary policy '" + name + "'");
}

const char* to_string(SiStencil s) {
  return s == SiStencil::Wide ? "wide" : "compact";
}

SiStencil parse_si_stencil(const std::string& name) {
  if (name == "wide") return SiStencil::Wide;
  if (name == "compact") return SiStencil::Compact;
  throw Error(ErrorCode::InvalidArgument, "unknown SI stencil '" + name + "'");
}

std::size_t Grid1D::nearest_cell(double x) const {
  const double k = std::floor((x - x_min) / dx);
  const double clamped = std::clamp(k, 0.0, static_cast<double>(n_cells - 1));
  return n_ghost + static_cast<std::size_t>(clamped);
}

Grid1D make_grid(double x_min, double x_max, std::size_t n_cells,
                 std::size_t n_ghost) {
  if (!(x_max > x_min) || n_cells < 4) {
    std::ostringstream msg;
    msg << "grid extent [" << x_min << ", " << x_max << "] with " << n_cells
        << " cells is invalid (need x_max > x_min and at least 4 cells)";
    throw Error(ErrorCode::InvalidExtent, msg.str());
  }
  if (n_ghost < 2) {
    throw Error(ErrorCode::InvalidExtent, "at least two ghost layers are required");
  }
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.n_ghost = n_ghost;
  g.dx = (x_max - x_min) / static_cast<double>(n_cells);
  g.cell_centers.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double k = static_cast<double>(i) - static_cast<double>(n_ghost);
    g.cell_centers[i] = x_min + (k + 0.5) * g.dx;
  }
  return g;
}

Bathymetry bathymetry_from_samples(const Grid1D& grid, std::vector<double> b) {
  const std::size_t n = grid.size();
  Bathymetry out;
  out.b = std::move(b);
  out.b_x.assign(n, 0.0);
  out.b_xx.assign(n, 0.0);
  const double dx = grid.dx;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out.b_x[i] = (out.b[i + 1] - out.b[i - 1]) / (2.0 * dx);
    out.b_xx[i] = (out.b[i + 1] - 2.0 * out.b[i] + out.b[i - 1]) / (dx * dx);
  }
  out.b_x[0] = out.b_x[1];
  out.b_xx[0] = out.b_xx[1];
  out.b_x[n - 1] = out.b_x[n - 2];
  out.b_xx[n - 1] = out.b_xx[n - 2];
  return out;
}

double PiecewiseLinear::operator()(double x) const {
  if (points.empty()) return 0.0;
  if (x <= points.front().first) return points.front().second;
  if (x >= points.back().first) return points.back().second;
  auto hi = std::upper_bound(points.begin(), points.end(), x,
                             [](double v, const auto& p) { return v < p.first; });
  auto lo = hi - 1;
  const double span = hi->first - lo->first;
  if (span <= 0.0) return hi->second;
  const double s = (x - lo->first) / span;
  return lo->second + s * (hi->second - lo->second);
}

Bathymetry make_bathymetry(const Grid1D& grid, const PiecewiseLinear& profile) {
  return make_bathymetry(grid, [&](double x) { return profile(x); });
}

void SchemeParams::validate() const {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be > 0");
  if (!(cfl > 0.0)) throw Error(ErrorCode::InvalidArgument, "cfl must be > 0");
  if (!(mcfl_limit > 0.0 && mcfl_limit <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "mcfl_limit must lie in (0, 1]");
  }
  if (order != 1 && order != 2) throw Error(ErrorCode::InvalidArgument, "order must be 1 or 2");
  if (!(g > 0.0)) throw Error(ErrorCode::InvalidArgument, "g must be > 0");
  if (!(t_final >= 0.0)) throw Error(ErrorCode::InvalidArgument, "t_final must be >= 0");
  if (!(si_filter >= 0.0 && si_filter <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "si_filter must lie in [0, 1]");
  }
}

void apply_boundary(std::span<double> f, const Grid1D& grid, Boundary policy,
                    double parity) {
  const std::size_t ng = grid.n_ghost;
  const std::size_t n = grid.n_cells;
  const std::size_t first = ng;
  const std::size_t last = ng + n - 1;
  for (std::size_t k = 1; k <= ng; ++k) {
    switch (policy) {
      case Boundary::Transmissive:
        f[first - k] = f[first];
        f[last + k] = f[last];
        break;
      case Boundary::Periodic:
        f[first - k] = f[last + 1 - k];
        f[last + k] = f[first + k - 1];
        break;
      case Boundary::Reflective:
        f[first - k] = parity * f[first + k - 1];
        f[last + k] = parity * f[last + 1 - k];
        break;
    }
  }
}

void apply_boundary(HsgnState& s, const Grid1D& grid, Boundary policy) {
  apply_boundary(s.h, grid, policy, 1.0);
  apply_boundary(s.q, grid, policy, -1.0);
  apply_boundary(s.heta, grid, policy, 1.0);
  // w ~ -h u_x is even under x -> -x, so a wall mirrors it like h
  apply_boundary(s.hw, grid, policy, 1.0);
}

void apply_boundary(SwState& s, const Grid1D& grid, Boundary policy) {
  apply_boundary(s.h, grid, policy, 1.0);
  apply_boundary(s.q, grid, policy, -1.0);
}

double total_mass(std::span<const double> h, const Grid1D& grid) {
  double sum = 0.0;
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) sum += h[i];
  return sum * grid.dx;
}

double total_momentum(std::span<const double> q, const Grid1D& grid) {
  return total_mass(q, grid);
}

void check_wet(std::span<const double> h, const Grid1D& grid, double h_min,
               const char* where) {
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    if (!std::isfinite(h[i])) {
      std::ostringstream msg;
      msg << where << ": non-finite depth at cell " << i - grid.n_ghost;
      throw Error(ErrorCode::NonFinite, msg.str());
    }
    if (h[i] <= h_min) {
      std::ostringstream msg;
      msg << where << ": depth " << h[i] << " at cell " << i - grid.n_ghost
          << " (x = " << grid.cell_centers[i] << ") is below h_min = " << h_min;
      throw Error(ErrorCode::DryBed, msg.str());
    }
  }
}

namespace {
void check_field(std::span<const double> f, const Grid1D& grid, const char* name,
                 const char* where) {
  for (std::size_t i = grid.begin(); i < grid.end(); ++i) {
    if (!std::isfinite(f[i])) {
      std::ostringstream msg;
      msg << where << ": non-finite " << name << " at cell " << i - grid.n_ghost;
      throw Error(ErrorCode::NonFinite, msg.str());
    }
  }
}
}  // namespace

void check_finite(const HsgnState& s, const Grid1D& grid, const char* where) {
  check_field(s.h, grid, "h", where);
  check_field(s.q, grid, "q", where);
  check_field(s.heta, grid, "heta", where);
  check_field(s.hw, grid, "hw", where);
}

void check_finite(const SwState& s, const Grid1D& grid, const char* where) {
  check_field(s.h, grid, "h", where);
  check_field(s.q, grid, "q", where);
}

}  // namespace sgn

namespace sgn {

std::vector<double> RunReport::surface() const {
  std::vector<double> z(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) z[i] = h[i] + (i < b.size() ? b[i] : 0.0);
  return z;
}

}  // namespace sgn
