#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgn/benchmarks.hpp"
#include "sgn/config.hpp"
#include "sgn/core.hpp"
#include "sgn/explicit_solver.hpp"
#include "sgn/run_report.hpp"

namespace sgn::io {

enum class SolverKind { ExplicitHsgn, SiHsgn, ClassicalSgn };

const char* to_string(SolverKind s);
SolverKind parse_solver(const std::string& name);

// Everything a config file can say. Sweep keys (lambda, n_cells, cfl,
// favre_epsilon) accept lists; the run command takes their cartesian product.
struct RunConfig {
  std::string source;
  std::string scenario;
  std::vector<SolverKind> solvers{SolverKind::SiHsgn};
  std::vector<int> orders{2};
  std::vector<double> lambdas;
  std::vector<std::size_t> n_cells;
  std::vector<double> cfls;  // empty: per-solver default
  double cfl_si = 2.0;
  double cfl_explicit = 0.4;
  double cfl_sgn = 0.9;
  double mcfl_limit = 0.5;
  std::optional<Boundary> boundary;
  std::optional<double> t_final;
  std::optional<double> x_min, x_max;
  std::vector<double> gauges;
  std::string output_dir;
  double g = 9.81;
  double h_min = 1e-8;
  bool minmod = false;
  SiStencil si_stencil = SiStencil::Wide;
  double si_filter = 0.05;
  explicit_hsgn::RusanovSpeed explicit_speed = explicit_hsgn::RusanovSpeed::Spectral;

  // scenario parameters
  bench::SolitonSpec soliton;
  double favre_h0 = 0.2;
  std::vector<double> favre_epsilons{1.1};
  std::optional<double> favre_T;
  double treske_t_tilde = 256.0;
  bench::DingemansSpec dingemans;

  // outputs and protocol
  bool write_trace = false;
  bool reference = false;   // fine-grid classical-SGN reference (3x cells)
  int repetitions = 3;      // timing medians
  double blowup_depth = 0.0;  // 0: off
};

RunConfig parse_run_config(const Config& cfg);
RunConfig load_run_config(const std::string& path);

const std::vector<std::string>& scenario_names();

struct ScenarioSetup {
  Grid1D grid;
  HsgnState state;
  Bathymetry bathy;
  std::vector<double> gauges;
  Boundary boundary = Boundary::Transmissive;
  double t_final = 0.0;
  std::optional<bench::SolitonSpec> soliton;  // exact solution available
  std::optional<bench::FavreSpec> favre;      // bore diagnostics apply
};

ScenarioSetup build_scenario(const RunConfig& rc, std::size_t n_cells, double favre_epsilon);

struct CaseSpec {
  SolverKind solver = SolverKind::SiHsgn;
  int order = 2;
  double lambda = 1000.0;
  std::size_t n_cells = 0;
  double cfl = 0.0;  // 0: per-solver default
  double favre_epsilon = 1.1;
};

SchemeParams scheme_params(const RunConfig& rc, const CaseSpec& cs, const ScenarioSetup& setup);

struct CaseResult {
  ScenarioSetup setup;
  SchemeParams params;
  RunReport report;
};

CaseResult run_case(const RunConfig& rc, const CaseSpec& cs, const RunOptions* options = nullptr);
// Runs an already-built scenario (the acceptance suite tweaks setups directly).
RunReport run_solver(SolverKind solver, const ScenarioSetup& setup, const SchemeParams& params,
                     const RunOptions& options,
                     explicit_hsgn::RusanovSpeed speed = explicit_hsgn::RusanovSpeed::Spectral);

// SGN_OUTPUT_ROOT (if set) / output_dir, or output_dir relative to the cwd.
std::filesystem::path output_directory(const RunConfig& rc);

// CSV writers (15 significant digits, LF line endings).
void write_profile_csv(const std::filesystem::path& path, const RunReport& report);
void write_gauges_csv(const std::filesystem::path& path, const RunReport& report);
void write_trace_csv(const std::filesystem::path& path, const RunReport& report);

struct ConvergenceRow {
  std::size_t n_cells = 0;
  double error_h = 0.0;
  double error_u = 0.0;
  std::optional<double> order_h, order_u;
};

// log2(e_coarse / e_fine) between consecutive rows (grids doubling).
std::vector<ConvergenceRow> convergence_table(const RunConfig& rc, SolverKind solver, int order,
                                              double lambda, const std::vector<std::size_t>& grids,
                                              double cfl = 0.0);
void write_convergence_csv(const std::filesystem::path& path,
                           const std::vector<ConvergenceRow>& rows);

struct TimingRow {
  double lambda = 0.0;
  double t_si = 0.0, t_ex = 0.0, t_sgn = 0.0;
  double speedup() const { return t_si > 0.0 ? t_ex / t_si : 0.0; }
};
void write_timing_csv(const std::filesystem::path& path, const std::vector<TimingRow>& rows);

// CLI commands; return a process exit status.
int command_run(const std::string& config_path, std::ostream& log);
int command_converge(const std::string& config_path, std::ostream& log);
int command_timing(const std::string& config_path, std::ostream& log);

}  // namespace sgn::io
