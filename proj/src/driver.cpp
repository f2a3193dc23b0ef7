#include "sgn/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "sgn/classical_sgn.hpp"
#include "sgn/si_solver.hpp"

namespace sgn::io {

const char* to_string(SolverKind s) {
  switch (s) {
    case SolverKind::ExplicitHsgn: return "explicit-hsgn";
    case SolverKind::SiHsgn: return "si-hsgn";
    case SolverKind::ClassicalSgn: return "classical-sgn";
  }
  return "?";
}

SolverKind parse_solver(const std::string& name) {
  if (name == "explicit-hsgn" || name == "explicit") return SolverKind::ExplicitHsgn;
  if (name == "si-hsgn" || name == "si") return SolverKind::SiHsgn;
  if (name == "classical-sgn" || name == "sgn") return SolverKind::ClassicalSgn;
  throw Error(ErrorCode::InvalidArgument, "unknown solver '" + name + "'");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"soliton", "gaussian", "hump",     "lake_at_rest",
                                              "favre",   "treske",   "shelf",    "dingemans"};
  return names;
}

namespace {

const std::set<std::string> kKnownKeys{
    "scenario", "solver", "order", "lambda", "n_cells", "cfl", "cfl_si", "cfl_explicit",
    "cfl_sgn", "mcfl_limit", "boundary", "t_final", "x_min", "x_max", "gauges", "output_dir",
    "g", "h_min", "minmod", "si_stencil", "si_filter", "explicit_speed", "h_inf", "amplitude",
    "x0", "favre_h0", "favre_epsilon", "favre_T", "treske_t_tilde", "dingemans_h0",
    "dingemans_amplitude", "dingemans_k", "shoal_x", "shoal_b", "trace", "reference",
    "repetitions", "blowup_depth"};

// Wraps a conversion so that its error names the config line of `key`.
template <class F>
auto at_key(const Config& cfg, const std::string& key, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigParse) throw;
    std::ostringstream msg;
    msg << cfg.source() << ": '" << key << "': " << e.what();
    throw Error(ErrorCode::ConfigParse, msg.str());
  }
}

double scenario_default_lambda(const std::string& s) {
  if (s == "favre" || s == "dingemans") return 100.0;
  if (s == "treske" || s == "shelf") return 500.0;
  return 1000.0;
}

std::size_t scenario_default_cells(const std::string& s) {
  if (s == "soliton" || s == "favre") return 2000;
  if (s == "lake_at_rest") return 1000;
  if (s == "dingemans") return 15000;
  if (s == "treske") return 3000;
  return 5000;
}

// CFL_IMEX used for each test in the reference experiments (2.5 for the soliton).
double scenario_default_cfl_si(const std::string& s) {
  if (s == "soliton") return 2.5;
  if (s == "favre") return 4.0;
  if (s == "shelf" || s == "dingemans") return 3.0;
  return 2.0;
}

}  // namespace

RunConfig parse_run_config(const Config& cfg) {
  cfg.reject_unknown(kKnownKeys);
  RunConfig rc;
  rc.source = cfg.source();
  rc.scenario = cfg.get_string("scenario");
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), rc.scenario) == names.end()) {
    throw Error(ErrorCode::ConfigParse,
                cfg.source() + ": 'scenario': unknown scenario '" + rc.scenario + "'");
  }
  if (cfg.has("solver")) {
    rc.solvers.clear();
    for (const auto& s : cfg.get_strings("solver")) {
      rc.solvers.push_back(at_key(cfg, "solver", [&] { return parse_solver(s); }));
    }
  }
  if (cfg.has("order")) {
    rc.orders.clear();
    for (long long o : cfg.get_ints("order")) {
      if (o != 1 && o != 2) throw Error(ErrorCode::ConfigParse, cfg.source() + ": 'order' must be 1 or 2");
      rc.orders.push_back(static_cast<int>(o));
    }
  }
  rc.lambdas = cfg.get_doubles("lambda", {scenario_default_lambda(rc.scenario)});
  if (cfg.has("n_cells")) {
    for (long long n : cfg.get_ints("n_cells")) {
      if (n < 4) throw Error(ErrorCode::ConfigParse, cfg.source() + ": 'n_cells' must be >= 4");
      rc.n_cells.push_back(static_cast<std::size_t>(n));
    }
  } else {
    rc.n_cells = {scenario_default_cells(rc.scenario)};
  }
  rc.cfls = cfg.get_doubles("cfl", {});
  rc.cfl_si = cfg.get_double("cfl_si", scenario_default_cfl_si(rc.scenario));
  rc.cfl_explicit = cfg.get_double("cfl_explicit", rc.cfl_explicit);
  rc.cfl_sgn = cfg.get_double("cfl_sgn", rc.cfl_sgn);
  rc.mcfl_limit = cfg.get_double("mcfl_limit", rc.mcfl_limit);
  if (cfg.has("boundary")) {
    rc.boundary = at_key(cfg, "boundary", [&] { return parse_boundary(cfg.get_string("boundary")); });
  }
  if (cfg.has("t_final")) rc.t_final = cfg.get_double("t_final");
  if (cfg.has("x_min")) rc.x_min = cfg.get_double("x_min");
  if (cfg.has("x_max")) rc.x_max = cfg.get_double("x_max");
  rc.gauges = cfg.get_doubles("gauges", {});
  rc.output_dir = cfg.get_string("output_dir", "results/" + rc.scenario);
  rc.g = cfg.get_double("g", rc.g);
  rc.h_min = cfg.get_double("h_min", rc.h_min);
  rc.minmod = cfg.get_bool("minmod", false);
  if (cfg.has("si_stencil")) {
    rc.si_stencil = at_key(cfg, "si_stencil", [&] { return parse_si_stencil(cfg.get_string("si_stencil")); });
  }
  rc.si_filter = cfg.get_double("si_filter", rc.si_filter);
  if (cfg.has("explicit_speed")) {
    rc.explicit_speed = at_key(cfg, "explicit_speed", [&] {
      return explicit_hsgn::parse_rusanov_speed(cfg.get_string("explicit_speed"));
    });
  }
  rc.soliton.h_inf = cfg.get_double("h_inf", rc.soliton.h_inf);
  rc.soliton.amplitude = cfg.get_double("amplitude", rc.soliton.amplitude);
  rc.soliton.x0 = cfg.get_double("x0", rc.soliton.x0);
  rc.favre_h0 = cfg.get_double("favre_h0", rc.favre_h0);
  rc.favre_epsilons = cfg.get_doubles("favre_epsilon", rc.favre_epsilons);
  if (cfg.has("favre_T")) rc.favre_T = cfg.get_double("favre_T");
  rc.treske_t_tilde = cfg.get_double("treske_t_tilde", rc.treske_t_tilde);
  rc.dingemans.h0 = cfg.get_double("dingemans_h0", rc.dingemans.h0);
  rc.dingemans.amplitude = cfg.get_double("dingemans_amplitude", rc.dingemans.amplitude);
  rc.dingemans.k = cfg.get_double("dingemans_k", rc.dingemans.k);
  if (cfg.has("shoal_x") || cfg.has("shoal_b")) {
    const auto xs = cfg.get_doubles("shoal_x");
    const auto bs = cfg.get_doubles("shoal_b");
    if (xs.size() != bs.size() || xs.empty()) {
      throw Error(ErrorCode::ConfigParse,
                  cfg.source() + ": 'shoal_x' and 'shoal_b' must be lists of equal length");
    }
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k > 0 && !(xs[k] > xs[k - 1])) {
        throw Error(ErrorCode::ConfigParse, cfg.source() + ": 'shoal_x' must increase strictly");
      }
      rc.dingemans.shoal.points.emplace_back(xs[k], bs[k]);
    }
  }
  if (rc.scenario == "dingemans" && !cfg.has("gauges")) rc.gauges = rc.dingemans.gauges;
  rc.write_trace = cfg.get_bool("trace", false);
  rc.reference = cfg.get_bool("reference", false);
  rc.repetitions = static_cast<int>(cfg.get_int("repetitions", 3));
  if (rc.repetitions < 1) throw Error(ErrorCode::ConfigParse, cfg.source() + ": 'repetitions' must be >= 1");
  rc.blowup_depth = cfg.get_double("blowup_depth", 0.0);
  return rc;
}

RunConfig load_run_config(const std::string& path) {
  return parse_run_config(Config::load(path));
}

ScenarioSetup build_scenario(const RunConfig& rc, std::size_t n_cells, double favre_epsilon) {
  ScenarioSetup s;
  const std::string& name = rc.scenario;
  const double g = rc.g;
  double lo = 0.0, hi = 0.0, t = 0.0;
  bench::FavreSpec favre;
  favre.h0 = rc.favre_h0;
  favre.epsilon_ratio = favre_epsilon;
  if (name == "soliton") {
    lo = -50.0, hi = 50.0, t = 1.0;
  } else if (name == "gaussian") {
    lo = -200.0, hi = 200.0, t = 35.0;
  } else if (name == "hump" || name == "lake_at_rest") {
    lo = -150.0, hi = 150.0, t = name == "hump" ? 35.0 : 10.0;
  } else if (name == "favre") {
    // upstream state on the left, bore running to +x
    lo = -20.0, hi = 30.0;
    t = favre.physical_time(rc.favre_T.value_or(50.0), g);
  } else if (name == "treske") {
    lo = 0.0, hi = 73.58;
    favre.x_jump = 68.58;
    favre.direction = -1;
    t = rc.treske_t_tilde * std::sqrt(favre.h0 / g);
  } else if (name == "shelf") {
    lo = 0.0, hi = 280.0, t = 40.0;
  } else if (name == "dingemans") {
    lo = -140.0, hi = 100.0, t = 70.0;
  }
  s.grid = make_grid(rc.x_min.value_or(lo), rc.x_max.value_or(hi), n_cells);
  s.t_final = rc.t_final.value_or(t);
  if (name == "favre" && rc.favre_T && rc.t_final) {
    throw Error(ErrorCode::ConfigParse, rc.source + ": set either 'favre_T' or 't_final', not both");
  }
  s.boundary = rc.boundary.value_or(Boundary::Transmissive);
  s.gauges = rc.gauges;

  if (name == "soliton") {
    s.state = bench::init_soliton(rc.soliton, s.grid, g);
    s.soliton = rc.soliton;
  } else if (name == "gaussian") {
    s.state = bench::init_gaussian_bell(s.grid, g);
  } else if (name == "hump" || name == "lake_at_rest" || name == "shelf" || name == "dingemans") {
    bench::Scenario sc = name == "hump"           ? bench::init_gaussian_hump(s.grid, g)
                         : name == "lake_at_rest" ? bench::init_lake_at_rest_hump(s.grid, g)
                         : name == "shelf"        ? bench::init_shelf(s.grid, g)
                                                  : bench::init_dingemans(rc.dingemans, s.grid, g);
    s.state = std::move(sc.state);
    s.bathy = std::move(sc.bathy);
    if (s.gauges.empty()) s.gauges = sc.gauges;
  } else {
    s.state = bench::init_favre(favre, s.grid, g);
    s.favre = favre;
  }
  return s;
}

SchemeParams scheme_params(const RunConfig& rc, const CaseSpec& cs, const ScenarioSetup& setup) {
  SchemeParams p;
  p.g = rc.g;
  p.lambda = cs.lambda;
  p.order = cs.order;
  p.mcfl_limit = rc.mcfl_limit;
  p.boundary = setup.boundary;
  p.h_min = rc.h_min;
  p.t_final = setup.t_final;
  p.minmod_limiter = rc.minmod;
  p.si_stencil = rc.si_stencil;
  p.si_filter = rc.si_filter;
  double cfl = cs.cfl;
  if (!(cfl > 0.0)) {
    cfl = cs.solver == SolverKind::SiHsgn         ? rc.cfl_si
          : cs.solver == SolverKind::ExplicitHsgn ? rc.cfl_explicit
                                                  : rc.cfl_sgn;
  }
  p.cfl = cfl;
  p.validate();
  return p;
}

RunReport run_solver(SolverKind solver, const ScenarioSetup& setup, const SchemeParams& params,
                     const RunOptions& options, explicit_hsgn::RusanovSpeed speed) {
  const Bathymetry* bathy = setup.bathy.empty() ? nullptr : &setup.bathy;
  switch (solver) {
    case SolverKind::SiHsgn:
      return si_hsgn::run_si(setup.state, setup.grid, params, bathy, options).report;
    case SolverKind::ExplicitHsgn:
      return explicit_hsgn::run_explicit(setup.state, setup.grid, params, bathy, options, speed)
          .report;
    case SolverKind::ClassicalSgn:
      return classical::run_sgn(bench::to_sw(setup.state), setup.grid, params, bathy, options)
          .report;
  }
  throw Error(ErrorCode::InvalidArgument, "run_solver: unknown solver");
}

CaseResult run_case(const RunConfig& rc, const CaseSpec& cs, const RunOptions* options) {
  CaseResult out;
  out.setup = build_scenario(rc, cs.n_cells, cs.favre_epsilon);
  out.params = scheme_params(rc, cs, out.setup);
  RunOptions opts = options ? *options : RunOptions{};
  opts.gauges = out.setup.gauges;
  if (rc.blowup_depth > 0.0) opts.blowup_depth = rc.blowup_depth;
  try {
    out.report = run_solver(cs.solver, out.setup, out.params, opts, rc.explicit_speed);
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << rc.scenario << " / " << to_string(cs.solver) << " (order " << cs.order
        << ", lambda " << cs.lambda << ", N " << cs.n_cells << ", CFL " << out.params.cfl
        << "): " << e.what();
    throw Error(e.code(), msg.str());
  }
  return out;
}

std::filesystem::path output_directory(const RunConfig& rc) {
  std::filesystem::path dir(rc.output_dir);
  if (const char* root = std::getenv("SGN_OUTPUT_ROOT"); root && *root) {
    return std::filesystem::path(root) / dir.relative_path();
  }
  return dir;
}

namespace {

// One CSV file, 15 significant digits, LF line endings.
class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::string& header) : path_(path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    out_ << std::setprecision(15);
    out_ << header << '\n';
  }
  template <class... Ts>
  void row(const Ts&... values) {
    bool first = true;
    ((out_ << (first ? "" : ","), put(values), first = false), ...);
    out_ << '\n';
  }
  ~CsvFile() { out_.flush(); }

 private:
  void put(double v) {
    if (std::isnan(v)) out_ << "nan";
    else if (std::isinf(v)) out_ << (v > 0 ? "inf" : "-inf");
    else out_ << v;
  }
  void put(const std::optional<double>& v) {
    if (v) put(*v);
  }
  void put(std::size_t v) { out_ << v; }
  void put(int v) { out_ << v; }
  void put(const std::string& v) { out_ << v; }
  void put(const char* v) { out_ << v; }

  std::filesystem::path path_;
  std::ofstream out_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

void write_profile_csv(const std::filesystem::path& path, const RunReport& r) {
  CsvFile f(path, "x,h,u,eta,w,b,z");
  for (std::size_t k = 0; k < r.x.size(); ++k) {
    f.row(r.x[k], r.h[k], r.u[k], r.eta[k], r.w[k], r.b[k], r.h[k] + r.b[k]);
  }
}

void write_gauges_csv(const std::filesystem::path& path, const RunReport& r) {
  CsvFile f(path, "x_gauge,t,z");
  for (const auto& g : r.gauges) {
    for (std::size_t k = 0; k < g.times.size(); ++k) f.row(g.x_gauge, g.times[k], g.surface_elevation[k]);
  }
}

void write_trace_csv(const std::filesystem::path& path, const RunReport& r) {
  CsvFile f(path, "t,dt,cfl,mcfl,mass,kappa_min");
  for (const auto& s : r.trace) f.row(s.t, s.dt, s.cfl, s.mcfl, s.mass, s.kappa_min);
}

std::vector<ConvergenceRow> convergence_table(const RunConfig& rc, SolverKind solver, int order,
                                              double lambda, const std::vector<std::size_t>& grids,
                                              double cfl) {
  std::vector<ConvergenceRow> rows;
  for (std::size_t n : grids) {
    CaseSpec cs{solver, order, lambda, n, cfl, 1.1};
    RunOptions opts;
    opts.record_trace = false;
    const CaseResult res = run_case(rc, cs, &opts);
    if (!res.setup.soliton) {
      throw Error(ErrorCode::InvalidArgument, "convergence tables need the soliton scenario");
    }
    std::vector<double> eh(res.report.x.size()), eu(res.report.x.size());
    for (std::size_t k = 0; k < eh.size(); ++k) {
      const auto v = bench::exact_soliton(*res.setup.soliton, res.report.x[k], res.report.t_final,
                                          res.params.g);
      eh[k] = v.h;
      eu[k] = v.u;
    }
    ConvergenceRow row;
    row.n_cells = n;
    row.error_h = bench::l1_error(res.report.h, eh, res.setup.grid.dx);
    row.error_u = bench::l1_error(res.report.u, eu, res.setup.grid.dx);
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      const double ratio = std::log2(static_cast<double>(n) / static_cast<double>(prev.n_cells));
      row.order_h = std::log2(prev.error_h / row.error_h) / ratio;
      row.order_u = std::log2(prev.error_u / row.error_u) / ratio;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_convergence_csv(const std::filesystem::path& path,
                           const std::vector<ConvergenceRow>& rows) {
  CsvFile f(path, "n_cells,error_h,error_u,observed_order_h,observed_order_u");
  for (const auto& r : rows) f.row(r.n_cells, r.error_h, r.error_u, r.order_h, r.order_u);
}

void write_timing_csv(const std::filesystem::path& path, const std::vector<TimingRow>& rows) {
  CsvFile f(path, "lambda,t_si,t_ex,t_sgn,speedup");
  for (const auto& r : rows) f.row(r.lambda, r.t_si, r.t_ex, r.t_sgn, r.speedup());
}

namespace {

std::string case_tag(const RunConfig& rc, const CaseSpec& cs, const SchemeParams& p,
                     bool with_eps) {
  std::ostringstream s;
  s << rc.scenario << "_" << to_string(cs.solver) << "_o" << cs.order << "_lam" << fmt(cs.lambda)
    << "_N" << cs.n_cells << "_cfl" << fmt(p.cfl);
  if (with_eps) s << "_eps" << fmt(cs.favre_epsilon);
  return s.str();
}

// Fine-grid (3x) classical-SGN run averaged back onto the coarse cells.
std::vector<double> reference_depth(const RunConfig& rc, const CaseSpec& cs) {
  CaseSpec fine = cs;
  fine.solver = SolverKind::ClassicalSgn;
  fine.n_cells = 3 * cs.n_cells;
  fine.cfl = 0.0;
  RunOptions opts;
  opts.record_trace = false;
  const CaseResult res = run_case(rc, fine, &opts);
  std::vector<double> out(cs.n_cells);
  for (std::size_t k = 0; k < cs.n_cells; ++k) {
    out[k] = (res.report.h[3 * k] + res.report.h[3 * k + 1] + res.report.h[3 * k + 2]) / 3.0;
  }
  return out;
}

}  // namespace

int command_run(const std::string& config_path, std::ostream& log) {
  const RunConfig rc = load_run_config(config_path);
  const auto dir = output_directory(rc);
  std::filesystem::create_directories(dir);
  const bool bore = rc.scenario == "favre" || rc.scenario == "treske";
  const bool eps_sweep = rc.favre_epsilons.size() > 1;

  CsvFile summary(dir / "run_summary.csv",
                  "scenario,solver,order,lambda,n_cells,cfl,t_final,steps,wall_time,mass_drift,"
                  "kappa_min,max_cfl,max_mcfl,reference_error_h");
  std::optional<CsvFile> bores;
  if (bore) {
    bores.emplace(dir / "bore_extrema.csv",
                  "solver,lambda,n_cells,epsilon,froude,first_peak,first_trough,plateau");
  }
  int failures = 0;
  const std::vector<double> cfls = rc.cfls.empty() ? std::vector<double>{0.0} : rc.cfls;
  const std::vector<double> epsilons = bore ? rc.favre_epsilons : std::vector<double>{1.1};
  for (SolverKind solver : rc.solvers)
    for (int order : rc.orders)
      for (double lambda : rc.lambdas)
        for (std::size_t n : rc.n_cells)
          for (double cfl : cfls)
            for (double eps : epsilons) {
              const CaseSpec cs{solver, order, lambda, n, cfl, eps};
              RunOptions opts;
              opts.record_trace = rc.write_trace;
              CaseResult res;
              try {
                res = run_case(rc, cs, &opts);
              } catch (const Error& e) {
                log << "FAILED " << e.what() << "\n";
                ++failures;
                continue;
              }
              const std::string tag = case_tag(rc, cs, res.params, bore && eps_sweep);
              write_profile_csv(dir / ("profile_" + tag + ".csv"), res.report);
              if (!res.report.gauges.empty()) write_gauges_csv(dir / ("gauges_" + tag + ".csv"), res.report);
              if (rc.write_trace) write_trace_csv(dir / ("trace_" + tag + ".csv"), res.report);
              std::optional<double> ref_err;
              if (rc.reference) {
                const auto ref = reference_depth(rc, cs);
                ref_err = bench::l1_error(res.report.h, ref, res.setup.grid.dx);
              }
              const double kmin = std::isfinite(res.report.kappa_min)
                                      ? res.report.kappa_min
                                      : std::numeric_limits<double>::quiet_NaN();
              summary.row(rc.scenario, std::string(to_string(solver)), order, lambda, n,
                          res.params.cfl, res.report.t_final, res.report.step_count,
                          res.report.wall_time, res.report.mass_drift(), kmin,
                          res.report.max_cfl, res.report.max_mcfl, ref_err);
              if (bores) {
                const auto& fs = *res.setup.favre;
                try {
                  const auto ex = bench::favre_peak_trough(res.report.h, res.setup.grid, fs.h0,
                                                           fs.direction);
                  const double froude = std::sqrt(eps * (eps + 1.0) / 2.0);
                  bores->row(std::string(to_string(solver)), lambda, n, eps, froude,
                             ex.first_peak, ex.first_trough, ex.plateau);
                } catch (const Error& e) {
                  log << "note: " << tag << ": " << e.what() << "\n";
                }
              }
              log << "ok " << tag << "  steps=" << res.report.step_count
                  << " wall=" << res.report.wall_time << "s\n";
            }
  log << "wrote " << dir.string() << "\n";
  return failures == 0 ? 0 : 1;
}

int command_converge(const std::string& config_path, std::ostream& log) {
  RunConfig rc = load_run_config(config_path);
  if (rc.scenario != "soliton") {
    throw Error(ErrorCode::ConfigParse, rc.source + ": 'scenario': converge needs 'soliton'");
  }
  const auto dir = output_directory(rc);
  std::filesystem::create_directories(dir);
  std::vector<std::size_t> grids = rc.n_cells;
  std::sort(grids.begin(), grids.end());
  const double cfl = rc.cfls.empty() ? 0.0 : rc.cfls.front();
  for (SolverKind solver : rc.solvers)
    for (int order : rc.orders)
      for (double lambda : rc.lambdas) {
        const auto rows = convergence_table(rc, solver, order, lambda, grids, cfl);
        std::ostringstream name;
        name << "convergence_" << to_string(solver) << "_o" << order << "_lam" << fmt(lambda)
             << ".csv";
        write_convergence_csv(dir / name.str(), rows);
        log << name.str() << "\n";
        for (const auto& r : rows) {
          log << "  N=" << r.n_cells << " e_h=" << r.error_h << " e_u=" << r.error_u;
          if (r.order_h) log << " order_h=" << *r.order_h << " order_u=" << *r.order_u;
          log << "\n";
        }
      }
  return 0;
}

int command_timing(const std::string& config_path, std::ostream& log) {
  const RunConfig rc = load_run_config(config_path);
  const auto dir = output_directory(rc);
  std::filesystem::create_directories(dir);
  const std::size_t n = rc.n_cells.front();
  const int order = rc.orders.front();
  auto median_time = [&](SolverKind solver, double lambda) {
    std::vector<double> t;
    for (int r = 0; r < rc.repetitions; ++r) {
      RunOptions opts;
      opts.record_trace = false;
      t.push_back(run_case(rc, CaseSpec{solver, order, lambda, n, 0.0, rc.favre_epsilons.front()}, &opts)
                      .report.wall_time);
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
  };
  auto wants = [&](SolverKind s) {
    return std::find(rc.solvers.begin(), rc.solvers.end(), s) != rc.solvers.end();
  };
  std::vector<TimingRow> rows;
  for (double lambda : rc.lambdas) {
    TimingRow row;
    row.lambda = lambda;
    if (wants(SolverKind::SiHsgn)) row.t_si = median_time(SolverKind::SiHsgn, lambda);
    if (wants(SolverKind::ExplicitHsgn)) row.t_ex = median_time(SolverKind::ExplicitHsgn, lambda);
    if (wants(SolverKind::ClassicalSgn)) row.t_sgn = median_time(SolverKind::ClassicalSgn, lambda);
    log << "lambda=" << lambda << " t_si=" << row.t_si << " t_ex=" << row.t_ex
        << " t_sgn=" << row.t_sgn << " speedup=" << row.speedup() << "\n";
    rows.push_back(row);
  }
  write_timing_csv(dir / "timing.csv", rows);
  log << "wrote " << (dir / "timing.csv").string() << "\n";
  return 0;
}

}  // namespace sgn::io
