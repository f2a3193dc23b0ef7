#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgn {

enum class ErrorCode {
  InvalidExtent,
  NonpositiveDepth,
  DryBed,
  SingularPivot,
  CoercivityViolation,
  NonFinite,
  Diverged,
  ZeroNorm,
  NoBoreFound,
  ConfigParse,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Boundary { Transmissive, Periodic, Reflective };

const char* to_string(Boundary b);
Boundary parse_boundary(const std::string& name);

// Uniform cell-centred mesh. Storage index i maps to interior cell i - n_ghost.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_cells = 0;
  std::size_t n_ghost = 2;
  double dx = 0.0;
  std::vector<double> cell_centers;  // all storage cells, ghosts included

  std::size_t size() const { return n_cells + 2 * n_ghost; }
  std::size_t begin() const { return n_ghost; }
  std::size_t end() const { return n_ghost + n_cells; }
  // centre of interior cell k (0-based, without ghosts)
  double center(std::size_t k) const { return cell_centers[n_ghost + k]; }
  // storage index of the cell containing x (clamped to the interior)
  std::size_t nearest_cell(double x) const;
};

Grid1D make_grid(double x_min, double x_max, std::size_t n_cells,
                 std::size_t n_ghost = 2);

// Conserved fields of the relaxation system. For bathymetric runs `heta`
// stores h * (eta + 1.5 b), the evolved relaxation variable.
struct HsgnState {
  std::vector<double> h;
  std::vector<double> q;
  std::vector<double> heta;
  std::vector<double> hw;

  HsgnState() = default;
  explicit HsgnState(std::size_t n) : h(n), q(n), heta(n), hw(n) {}
  std::size_t size() const { return h.size(); }
};

struct SwState {
  std::vector<double> h;
  std::vector<double> q;

  SwState() = default;
  explicit SwState(std::size_t n) : h(n), q(n) {}
  std::size_t size() const { return h.size(); }
};

struct Bathymetry {
  std::vector<double> b;
  std::vector<double> b_x;
  std::vector<double> b_xx;

  bool empty() const { return b.empty(); }
};

// Samples b at every storage cell and differentiates with centred stencils.
// Ghost-cell derivatives use one-sided copies of the adjacent interior value.
template <class F>
Bathymetry make_bathymetry(const Grid1D& grid, F&& b_of_x);

Bathymetry bathymetry_from_samples(const Grid1D& grid, std::vector<double> b);

// Piecewise-linear profile through (x, b) breakpoints, constant outside.
struct PiecewiseLinear {
  std::vector<std::pair<double, double>> points;
  double operator()(double x) const;
};

Bathymetry make_bathymetry(const Grid1D& grid, const PiecewiseLinear& profile);

// Depth operator of the semi-implicit solver. `Wide` eliminates the momentum
// from the central-difference semi-discrete system (D_x (kappa D_x h)), which
// matches the back-substitution; `Compact` is the three-point face-averaged
// operator. See si_solver.cpp.
enum class SiStencil { Wide, Compact };

const char* to_string(SiStencil s);
SiStencil parse_si_stencil(const std::string& name);

struct SchemeParams {
  double g = 9.81;
  double lambda = 1000.0;
  double cfl = 0.4;
  double mcfl_limit = 0.5;
  int order = 2;
  Boundary boundary = Boundary::Transmissive;
  double h_min = 1e-8;
  double t_final = 1.0;
  bool minmod_limiter = false;
  SiStencil si_stencil = SiStencil::Wide;
  double si_filter = 0.05;  // odd-even damping per semi-implicit step, 0 disables

  void validate() const;
};

struct GaugeRecord {
  double x_gauge = 0.0;
  std::vector<double> times;
  std::vector<double> surface_elevation;
};

// Ghost fill. Even fields mirror with +1 under reflective walls, odd with -1.
void apply_boundary(std::span<double> field, const Grid1D& grid,
                    Boundary policy, double parity = 1.0);
void apply_boundary(HsgnState& state, const Grid1D& grid, Boundary policy);
void apply_boundary(SwState& state, const Grid1D& grid, Boundary policy);

double total_mass(std::span<const double> h, const Grid1D& grid);
inline double total_mass(const HsgnState& s, const Grid1D& grid) {
  return total_mass(s.h, grid);
}
inline double total_mass(const SwState& s, const Grid1D& grid) {
  return total_mass(s.h, grid);
}
double total_momentum(std::span<const double> q, const Grid1D& grid);

// Throws DryBed (with the offending cell) when any interior h <= h_min,
// NonFinite when a field holds NaN/inf.
void check_wet(std::span<const double> h, const Grid1D& grid, double h_min,
               const char* where);
void check_finite(const HsgnState& s, const Grid1D& grid, const char* where);
void check_finite(const SwState& s, const Grid1D& grid, const char* where);

template <class F>
Bathymetry make_bathymetry(const Grid1D& grid, F&& b_of_x) {
  std::vector<double> b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) b[i] = b_of_x(grid.cell_centers[i]);
  return bathymetry_from_samples(grid, std::move(b));
}

}  // namespace sgn
