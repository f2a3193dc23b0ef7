#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "../oracles.hpp"
#include "sgn/benchmarks.hpp"
#include "sgn/classical_sgn.hpp"
#include "sgn/driver.hpp"
#include "sgn/explicit_solver.hpp"
#include "sgn/si_solver.hpp"

namespace sgn::acceptance {

namespace {

using io::CaseSpec;
using io::RunConfig;
using io::SolverKind;

// Pinned tolerances.
constexpr double kOrder1Min = 0.8;
constexpr double kOrder2Min = 1.7;
constexpr double kC1Budget = 120.0;  // s
constexpr double kC3Budget = 60.0;   // s
constexpr double kC3MaxDeviation = 1.5;
constexpr double kC3BlowupDepth = 10.0;
constexpr double kSpeedupMin = 1.67;
constexpr double kMassDriftMax = 1e-10;
constexpr double kPlateauLo = 0.08, kPlateauHi = 0.12;
constexpr double kFavrePairwise = 0.03;
constexpr double kSiExplicit = 0.01;
constexpr double kVsClassical = 0.03;
constexpr double kOracleTol = 1e-12;
constexpr double kTableauTol = 1e-15;
constexpr double kRestTol = 0.0;  // rest states must come back bit for bit
constexpr double kLakeRatioMin = 3.0;

struct SiRecord {
  std::string label;
  double kappa_min = std::numeric_limits<double>::infinity();
  std::string violation;  // non-empty when the run aborted on kappa <= 0
};

struct Context {
  std::ostream& log;
  std::vector<SiRecord> si_runs;
  std::vector<int> si_criteria;  // criteria that contributed to si_runs
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

RunConfig scenario(const std::string& name) {
  RunConfig rc;
  rc.source = "<acceptance>";
  rc.scenario = name;
  rc.cfl_si = 2.0;
  rc.cfl_explicit = 0.4;
  rc.cfl_sgn = 0.9;
  return rc;
}

struct Attempt {
  std::optional<io::CaseResult> result;
  std::optional<ErrorCode> error;
  std::string message;
};

// Runs one case; semi-implicit runs are logged for the coercivity audit.
Attempt attempt(Context& ctx, const std::string& label, const RunConfig& rc, const CaseSpec& cs,
                RunOptions opts = {}) {
  Attempt a;
  opts.record_trace = false;
  try {
    a.result = io::run_case(rc, cs, &opts);
  } catch (const Error& e) {
    a.error = e.code();
    a.message = e.what();
  }
  if (cs.solver == SolverKind::SiHsgn) {
    SiRecord r;
    r.label = label;
    if (a.result) r.kappa_min = a.result->report.kappa_min;
    if (a.error == ErrorCode::CoercivityViolation) r.violation = a.message;
    if (a.result || a.error == ErrorCode::CoercivityViolation) ctx.si_runs.push_back(r);
  }
  ctx.log << "  " << label << ": ";
  if (a.result) {
    const RunReport& rep = a.result->report;
    ctx.log << rep.step_count << " steps, " << fmt(rep.wall_time, 3) << " s";
    if (cs.solver == SolverKind::SiHsgn) ctx.log << ", kappa_min " << fmt(rep.kappa_min);
  } else {
    ctx.log << "FAILED (" << to_string(*a.error) << "): " << a.message;
  }
  ctx.log << "\n";
  return a;
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b, double dx) {
  return bench::l1_error(a, b, dx);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Outcome c1_soliton_convergence(Context& ctx) {
  Outcome o{1, "soliton spatial convergence"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> grids{250, 500, 1000, 2000};
  RunConfig rc = scenario("soliton");
  rc.cfl_si = 2.5;
  bool ok = true;
  std::ostringstream detail;
  for (SolverKind solver : {SolverKind::SiHsgn, SolverKind::ExplicitHsgn}) {
    for (int order : {1, 2}) {
      std::vector<std::optional<std::pair<double, double>>> err;
      for (std::size_t n : grids) {
        std::ostringstream label;
        label << "C1 " << io::to_string(solver) << " o" << order << " N=" << n;
        const Attempt a = attempt(ctx, label.str(), rc, CaseSpec{solver, order, 1000.0, n, 0.0});
        if (!a.result) {
          err.emplace_back();
          continue;
        }
        const auto& rep = a.result->report;
        std::vector<double> eh(rep.x.size()), eu(rep.x.size());
        for (std::size_t k = 0; k < eh.size(); ++k) {
          const auto v = bench::exact_soliton(rc.soliton, rep.x[k], rep.t_final, rc.g);
          eh[k] = v.h;
          eu[k] = v.u;
        }
        const double dx = a.result->setup.grid.dx;
        err.emplace_back(std::make_pair(bench::l1_error(rep.h, eh, dx), bench::l1_error(rep.u, eu, dx)));
        ctx.log << "    L1 error h " << fmt(err.back()->first) << ", u " << fmt(err.back()->second)
                << "\n";
      }
      const double need = order == 1 ? kOrder1Min : kOrder2Min;
      detail << io::to_string(solver) << " o" << order << ": ";
      const auto& coarse = err[err.size() - 2];
      const auto& fine = err.back();
      if (!coarse || !fine) {
        ok = false;
        detail << "finest pair incomplete; ";
        continue;
      }
      const double ph = std::log2(coarse->first / fine->first);
      const double pu = std::log2(coarse->second / fine->second);
      const bool pass = ph >= need && pu >= need;
      ok = ok && pass;
      for (std::size_t j = 0; j < err.size(); ++j) {
        if (!err[j]) ok = false;
      }
      detail << "order h " << fmt(ph, 3) << ", u " << fmt(pu, 3) << " (need " << need << ")"
             << (pass ? "" : " x") << "; ";
    }
  }
  o.seconds = seconds_since(t0);
  if (o.seconds > kC1Budget) ok = false;
  detail << "runtime " << fmt(o.seconds, 3) << " s (budget " << kC1Budget << " s)";
  o.pass = ok;
  o.detail = detail.str();
  return o;
}

Outcome c2_lambda_convergence(Context& ctx) {
  Outcome o{2, "lambda-relaxation convergence"};
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = scenario("soliton");
  rc.cfl_si = 2.5;
  const std::size_t n = 2000;
  auto error_of = [&](const Attempt& a) {
    const auto& rep = a.result->report;
    std::vector<double> eh(rep.x.size());
    for (std::size_t k = 0; k < eh.size(); ++k) {
      eh[k] = bench::exact_soliton(rc.soliton, rep.x[k], rep.t_final, rc.g).h;
    }
    return bench::l1_error(rep.h, eh, a.result->setup.grid.dx);
  };
  const Attempt ref = attempt(ctx, "C2 classical-sgn o2 N=2000", rc,
                              CaseSpec{SolverKind::ClassicalSgn, 2, 1000.0, n, 0.0});
  if (!ref.result) {
    o.detail = "classical reference failed: " + ref.message;
    o.seconds = seconds_since(t0);
    return o;
  }
  const double floor = 2.0 * error_of(ref);
  const std::vector<double> lambdas{500.0, 1000.0, 5000.0, 10000.0};
  std::vector<double> errs;
  std::ostringstream detail;
  detail << "errors";
  bool ok = true;
  for (double lam : lambdas) {
    const Attempt a = attempt(ctx, "C2 si-hsgn o2 lambda=" + fmt(lam), rc,
                              CaseSpec{SolverKind::SiHsgn, 2, lam, n, 0.0});
    if (!a.result) {
      ok = false;
      detail << " " << fmt(lam) << ":failed";
      errs.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    errs.push_back(error_of(a));
    detail << " " << fmt(lam) << ":" << fmt(errs.back(), 3);
  }
  bool monotone = ok;
  for (std::size_t j = 1; ok && j < errs.size(); ++j) monotone = monotone && errs[j] <= errs[j - 1];
  bool ratio = false;
  if (ok) {
    const bool both_floor = errs[0] < floor && errs[2] < floor;
    ratio = both_floor || errs[0] / errs[2] >= 2.0;
    detail << "; e(500)/e(5000) " << fmt(errs[0] / errs[2], 3)
           << (both_floor ? " (both below floor)" : "");
  }
  detail << "; floor " << fmt(floor, 3) << "; monotone " << (monotone ? "yes" : "no");
  o.pass = ok && monotone && ratio;
  o.detail = detail.str();
  o.seconds = seconds_since(t0);
  return o;
}

double max_deviation(const std::vector<double>& h, double ref) {
  double m = 0.0;
  for (double v : h) m = std::max(m, std::abs(v - ref));
  return m;
}

Outcome c3_stability(Context& ctx) {
  Outcome o{3, "stability envelope"};
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = scenario("gaussian");
  rc.t_final = 5.0;
  const std::size_t n = 1000;
  std::ostringstream detail;

  const Attempt si = attempt(ctx, "C3 si-hsgn o2 CFL 2.0", rc,
                             CaseSpec{SolverKind::SiHsgn, 2, 1000.0, n, 2.0});
  bool si_ok = false;
  if (si.result) {
    const double dev = max_deviation(si.result->report.h, 1.0);
    si_ok = dev <= kC3MaxDeviation;
    detail << "SI CFL 2: max|h-1| " << fmt(dev, 3);
  } else {
    detail << "SI CFL 2: " << to_string(*si.error);
  }
  // informational: the first-order scheme under the same conditions
  const Attempt si1 = attempt(ctx, "C3 si-hsgn o1 CFL 2.0 (info)", rc,
                              CaseSpec{SolverKind::SiHsgn, 1, 1000.0, n, 2.0});
  detail << " (order 1: " << (si1.result ? "completes" : to_string(*si1.error)) << ")";

  RunOptions loose;
  loose.abort_on_dry = false;
  loose.blowup_depth = kC3BlowupDepth;
  const Attempt ex_big = attempt(ctx, "C3 explicit-hsgn o2 CFL 1.2", rc,
                                 CaseSpec{SolverKind::ExplicitHsgn, 2, 1000.0, n, 1.2}, loose);
  const bool blew_up = ex_big.error == ErrorCode::NonFinite || ex_big.error == ErrorCode::Diverged;
  detail << "; EX CFL 1.2: "
         << (blew_up ? std::string(to_string(*ex_big.error))
                     : ex_big.result ? std::string("completed") : std::string(to_string(*ex_big.error)));

  const Attempt ex_small = attempt(ctx, "C3 explicit-hsgn o2 CFL 0.4", rc,
                                   CaseSpec{SolverKind::ExplicitHsgn, 2, 1000.0, n, 0.4});
  const bool ex_ok = ex_small.result.has_value();
  detail << "; EX CFL 0.4: " << (ex_ok ? "completed" : to_string(*ex_small.error));

  o.seconds = seconds_since(t0);
  detail << "; runtime " << fmt(o.seconds, 3) << " s";
  o.pass = si_ok && blew_up && ex_ok && o.seconds < kC3Budget;
  o.detail = detail.str();
  return o;
}

double median3(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Outcome c4_speedup(Context& ctx) {
  Outcome o{4, "speedup"};
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = scenario("soliton");
  std::vector<double> t_si, t_ex;
  bool ok = true;
  for (int rep = 0; rep < 3 && ok; ++rep) {
    const Attempt si = attempt(ctx, "C4 si-hsgn o2 CFL 2.5 #" + std::to_string(rep + 1), rc,
                               CaseSpec{SolverKind::SiHsgn, 2, 1000.0, 2000, 2.5});
    const Attempt ex = attempt(ctx, "C4 explicit-hsgn o2 CFL 0.4 #" + std::to_string(rep + 1), rc,
                               CaseSpec{SolverKind::ExplicitHsgn, 2, 1000.0, 2000, 0.4});
    if (!si.result || !ex.result) {
      ok = false;
      break;
    }
    t_si.push_back(si.result->report.wall_time);
    t_ex.push_back(ex.result->report.wall_time);
  }
  if (ok) {
    const double s = median3(t_ex) / median3(t_si);
    o.pass = s >= kSpeedupMin;
    o.detail = "median t_EX " + fmt(median3(t_ex), 3) + " s, t_SI " + fmt(median3(t_si), 3) +
               " s, ratio " + fmt(s, 3) + " (need " + fmt(kSpeedupMin) + ")";
  } else {
    o.detail = "a timing run failed";
  }
  o.seconds = seconds_since(t0);
  return o;
}

Outcome c5_mass(Context& ctx) {
  Outcome o{5, "mass conservation"};
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = scenario("gaussian");
  rc.boundary = Boundary::Periodic;
  rc.t_final = 1e9;
  RunOptions opts;
  opts.max_steps = 1000;
  bool ok = true;
  std::ostringstream detail;
  // The order is not prescribed; both are checked.
  for (SolverKind s : {SolverKind::SiHsgn, SolverKind::ExplicitHsgn, SolverKind::ClassicalSgn}) {
    for (int order : {1, 2}) {
      const Attempt a = attempt(ctx, std::string("C5 ") + io::to_string(s) + " o" + std::to_string(order),
                                rc, CaseSpec{s, order, 500.0, 500, 0.0}, opts);
      detail << io::to_string(s) << " o" << order << " ";
      if (!a.result) {
        ok = false;
        detail << "aborted (" << to_string(*a.error) << "); ";
        continue;
      }
      if (a.result->report.step_count != 1000) {
        ok = false;
        detail << "stopped after " << a.result->report.step_count << " steps; ";
        continue;
      }
      const double drift = std::abs(a.result->report.mass_drift());
      ok = ok && drift <= kMassDriftMax;
      detail << fmt(drift, 3) << "; ";
    }
  }
  detail << "limit " << fmt(kMassDriftMax);
  o.pass = ok;
  o.detail = detail.str();
  o.seconds = seconds_since(t0);
  return o;
}

Outcome c6_favre(Context& ctx) {
  Outcome o{6, "Favre plateau"};
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = scenario("favre");
  rc.cfl_si = 4.0;
  rc.favre_T = 50.0;
  std::vector<std::vector<double>> z;
  std::vector<std::string> names;
  bool ok = true;
  std::ostringstream detail;
  double dx = 0.0;
  for (SolverKind s : {SolverKind::SiHsgn, SolverKind::ExplicitHsgn, SolverKind::ClassicalSgn}) {
    const Attempt a = attempt(ctx, std::string("C6 ") + io::to_string(s), rc,
                              CaseSpec{s, 2, 100.0, 2000, 0.0, 1.1});
    if (!a.result) {
      ok = false;
      detail << io::to_string(s) << " failed; ";
      continue;
    }
    const auto& setup = a.result->setup;
    const auto& rep = a.result->report;
    dx = setup.grid.dx;
    const double h0 = setup.favre->h0;
    const auto ex = bench::favre_peak_trough(rep.h, setup.grid, h0, setup.favre->direction);
    const double plateau =
        bench::plateau_mean(rep.h, setup.grid, h0, ex, 10.0, 30.0, setup.favre->direction);
    const bool in_band = plateau >= kPlateauLo && plateau <= kPlateauHi;
    ok = ok && in_band;
    detail << io::to_string(s) << " plateau " << fmt(plateau) << "; ";
    std::vector<double> zz(rep.h.size());
    for (std::size_t k = 0; k < zz.size(); ++k) zz[k] = (rep.h[k] - h0) / h0;
    z.push_back(std::move(zz));
    names.push_back(io::to_string(s));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < z.size(); ++a) {
    for (std::size_t b = a + 1; b < z.size(); ++b) {
      worst = std::max(worst, l1_distance(z[a], z[b], dx));
    }
  }
  ok = ok && z.size() == 3 && worst <= kFavrePairwise;
  detail << "worst pairwise L1 " << fmt(worst, 3) << " (limit " << kFavrePairwise << ")";
  o.pass = ok;
  o.detail = detail.str();
  o.seconds = seconds_since(t0);
  return o;
}

Outcome c7_cross_model(Context& ctx) {
  Outcome o{7, "cross-model agreement"};
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig rc = scenario("gaussian");
  std::vector<std::vector<double>> h;
  double dx = 0.0;
  bool ok = true;
  for (SolverKind s : {SolverKind::SiHsgn, SolverKind::ExplicitHsgn, SolverKind::ClassicalSgn}) {
    const Attempt a = attempt(ctx, std::string("C7 ") + io::to_string(s), rc,
                              CaseSpec{s, 2, 5000.0, 5000, 0.0});
    if (!a.result) {
      ok = false;
      h.emplace_back();
      continue;
    }
    dx = a.result->setup.grid.dx;
    h.push_back(a.result->report.h);
  }
  std::ostringstream detail;
  if (ok) {
    const double si_ex = l1_distance(h[0], h[1], dx);
    const double si_sgn = l1_distance(h[0], h[2], dx);
    const double ex_sgn = l1_distance(h[1], h[2], dx);
    ok = si_ex <= kSiExplicit && si_sgn <= kVsClassical && ex_sgn <= kVsClassical;
    detail << "SI-EX " << fmt(si_ex, 3) << " (limit " << kSiExplicit << "), SI-SGN "
           << fmt(si_sgn, 3) << ", EX-SGN " << fmt(ex_sgn, 3) << " (limit " << kVsClassical
           << ")";
  } else {
    detail << "a run failed";
  }
  o.pass = ok;
  o.detail = detail.str();
  o.seconds = seconds_since(t0);
  return o;
}

Outcome c8_coercivity(Context& ctx) {
  Outcome o{8, "coercivity monitor"};
  std::ostringstream detail;
  std::size_t bad = 0;
  double kmin = std::numeric_limits<double>::infinity();
  for (const auto& r : ctx.si_runs) {
    if (!r.violation.empty() || !(r.kappa_min > 0.0)) {
      ++bad;
      ctx.log << "  C8 violation in " << r.label << ": "
              << (r.violation.empty() ? "kappa_min " + fmt(r.kappa_min) : r.violation) << "\n";
    } else {
      kmin = std::min(kmin, r.kappa_min);
    }
  }
  const bool all_criteria = ctx.si_criteria.size() == 7;
  detail << ctx.si_runs.size() << " semi-implicit runs audited, " << bad << " with kappa <= 0";
  if (bad < ctx.si_runs.size()) detail << "; min kappa elsewhere " << fmt(kmin);
  if (!all_criteria) detail << "; criteria 1-7 were not all run";
  o.pass = all_criteria && bad == 0 && !ctx.si_runs.empty();
  o.detail = detail.str();
  return o;
}

Outcome c9_oracles(Context& ctx) {
  Outcome o{9, "oracle equivalence"};
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double worst_si = 0.0, worst_phi = 0.0, worst_tri = 0.0;
  const Boundary policies[] = {Boundary::Transmissive, Boundary::Reflective, Boundary::Periodic};

  for (Boundary bc : policies) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = 4 + rng() % 5;  // 4..8 cells
      const double L = 2.0 + 8.0 * U(rng);
      const Grid1D grid = make_grid(0.0, L, m);
      const HsgnState s = oracle::random_smooth_state(grid, rng);
      SchemeParams p;
      p.order = 1;
      p.boundary = bc;
      p.si_filter = 0.0;
      p.lambda = 50.0 + 1950.0 * U(rng);
      p.cfl = 2.0;
      HsgnState filled = s;
      apply_boundary(filled, grid, bc);
      const double tau = si_hsgn::si_dt(filled, grid, p);
      const HsgnState lib = si_hsgn::si_step_order1(filled, grid, p, tau);
      const HsgnState ref = oracle::si_order1_step(filled, grid, p, tau);
      using Field = std::vector<double> HsgnState::*;
      for (Field f : {&HsgnState::h, &HsgnState::q, &HsgnState::heta, &HsgnState::hw}) {
        worst_si = std::max(worst_si, oracle::max_rel_diff(lib.*f, ref.*f, grid.begin(), grid.end()));
      }

      // phi solve, flat and over a smooth bottom
      for (int with_bottom = 0; with_bottom < 2; ++with_bottom) {
        SwState sw = bench::to_sw(filled);
        apply_boundary(sw, grid, bc);
        Bathymetry bathy;
        if (with_bottom) {
          const double amp = 0.1 * U(rng);
          bathy = make_bathymetry(grid, [&](double x) { return amp * std::sin(x / L * 6.283185307179586); });
        }
        const std::vector<double> lib_phi =
            classical::solve_phi(sw, grid, p, with_bottom ? &bathy : nullptr);
        const std::vector<double> ref_phi = oracle::phi_solve(sw, bathy, grid, p);
        for (std::size_t k = 0; k < m; ++k) {
          const double a = lib_phi[grid.begin() + k], b = ref_phi[k];
          worst_phi = std::max(worst_phi, std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
      }
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 30;
    TridiagonalSystem sys(n, trial % 2 == 1);
    for (std::size_t i = 0; i < n; ++i) {
      sys.lower[i] = 2.0 * U(rng) - 1.0;
      sys.upper[i] = 2.0 * U(rng) - 1.0;
      const double off = std::abs(sys.lower[i]) + std::abs(sys.upper[i]);
      sys.diag[i] = (U(rng) < 0.5 ? -1.0 : 1.0) * (off + 0.1 + U(rng));
      sys.rhs[i] = 2.0 * U(rng) - 1.0;
    }
    if (!sys.periodic) {
      sys.lower[0] = 0.0;
      sys.upper[n - 1] = 0.0;
    }
    const std::vector<double> x = solve_tridiagonal(sys);
    const std::vector<double> ref = oracle::dense_solve(oracle::dense_of(sys), sys.rhs);
    worst_tri = std::max(worst_tri, oracle::max_rel_diff(x, ref, 0, n));
  }

  ctx.log << "  C9 worst differences: SI step " << fmt(worst_si, 3) << ", phi " << fmt(worst_phi, 3)
          << ", tridiagonal " << fmt(worst_tri, 3) << "\n";
  o.pass = worst_si <= kOracleTol && worst_phi <= kOracleTol && worst_tri <= kOracleTol;
  o.detail = "max componentwise difference: SI step " + fmt(worst_si, 3) + ", phi solve " +
             fmt(worst_phi, 3) + ", tridiagonal " + fmt(worst_tri, 3) + " (limit " +
             fmt(kOracleTol) + ")";
  o.seconds = seconds_since(t0);
  return o;
}

double rest_deviation(SolverKind solver, Boundary bc, int order) {
  const Grid1D grid = make_grid(0.0, 10.0, 40);
  HsgnState s(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s.h[i] = 1.0;
    s.heta[i] = 1.0;
  }
  SchemeParams p;
  p.lambda = 1000.0;
  p.order = order;
  p.boundary = bc;
  p.t_final = 1e9;
  p.cfl = solver == SolverKind::SiHsgn ? 2.0 : solver == SolverKind::ExplicitHsgn ? 0.4 : 0.9;
  RunOptions opts;
  opts.max_steps = 20;
  opts.record_trace = false;
  io::ScenarioSetup setup;
  setup.grid = grid;
  setup.state = s;
  setup.boundary = bc;
  const RunReport rep = io::run_solver(solver, setup, p, opts);
  double d = 0.0;
  for (std::size_t k = 0; k < rep.h.size(); ++k) {
    d = std::max({d, std::abs(rep.h[k] - 1.0), std::abs(rep.u[k]), std::abs(rep.eta[k] - 1.0),
                  std::abs(rep.w[k])});
  }
  return d;
}

Outcome c10_structure(Context& ctx) {
  Outcome o{10, "structural checks"};
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  const auto tab = si_hsgn::ImexTableau::standard();
  const double defect = tab.order_condition_defect();
  const bool tableau_ok = defect <= kTableauTol && tab.stiffly_accurate();
  detail << "tableau defect " << fmt(defect, 3) << (tab.stiffly_accurate() ? ", stiffly accurate"
                                                                           : ", NOT stiffly accurate");
  double rest = 0.0;
  bool rest_ran = true;
  for (SolverKind s : {SolverKind::SiHsgn, SolverKind::ExplicitHsgn, SolverKind::ClassicalSgn}) {
    for (Boundary bc : {Boundary::Transmissive, Boundary::Reflective, Boundary::Periodic}) {
      for (int order : {1, 2}) {
        try {
          rest = std::max(rest, rest_deviation(s, bc, order));
        } catch (const Error& e) {
          rest_ran = false;
          ctx.log << "  C10 rest state " << io::to_string(s) << ": " << e.what() << "\n";
        }
      }
    }
  }
  const bool rest_ok = rest_ran && rest <= kRestTol;
  detail << "; rest-state deviation after 20 steps " << fmt(rest, 3);

  RunConfig rc = scenario("lake_at_rest");
  rc.t_final = 10.0;
  double umax[2] = {0.0, 0.0};
  bool lake_ok = true;
  const std::size_t grids[2] = {500, 1000};
  for (int j = 0; j < 2; ++j) {
    const Attempt a = attempt(ctx, "C10 classical-sgn lake at rest N=" + std::to_string(grids[j]),
                              rc, CaseSpec{SolverKind::ClassicalSgn, 2, 1000.0, grids[j], 0.0});
    if (!a.result) {
      lake_ok = false;
      continue;
    }
    for (double u : a.result->report.u) umax[j] = std::max(umax[j], std::abs(u));
  }
  const double ratio = umax[0] / umax[1];
  lake_ok = lake_ok && ratio >= kLakeRatioMin;
  detail << "; lake-at-rest max|u| " << fmt(umax[0], 3) << " -> " << fmt(umax[1], 3) << ", ratio "
         << fmt(ratio, 3) << " (need " << kLakeRatioMin << ")";
  o.pass = tableau_ok && rest_ok && lake_ok;
  o.detail = detail.str();
  o.seconds = seconds_since(t0);
  return o;
}

}  // namespace

std::vector<Outcome> run(std::ostream& log, const std::vector<int>& only) {
  Context ctx{log, {}, {}};
  using Fn = std::function<Outcome(Context&)>;
  const std::vector<std::pair<int, Fn>> all{
      {1, c1_soliton_convergence}, {2, c2_lambda_convergence}, {3, c3_stability},
      {4, c4_speedup},             {5, c5_mass},               {6, c6_favre},
      {7, c7_cross_model},         {8, c8_coercivity},         {9, c9_oracles},
      {10, c10_structure}};
  std::vector<Outcome> out;
  for (const auto& [id, fn] : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    log << "[C" << id << "]\n";
    Outcome o;
    try {
      o = fn(ctx);
    } catch (const std::exception& e) {
      o.id = id;
      o.title = "criterion " + std::to_string(id);
      o.pass = false;
      o.detail = std::string("unexpected error: ") + e.what();
    }
    if (id <= 7) ctx.si_criteria.push_back(id);
    log << "  => " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << "\n";
    log.flush();
    out.push_back(o);
  }
  return out;
}

int summarize(const std::vector<Outcome>& outcomes, std::ostream& out) {
  int failures = 0;
  for (const auto& o : outcomes) {
    if (!o.pass) ++failures;
    out << (o.pass ? "PASS" : "FAIL") << " [C" << o.id << "] " << o.title << ": " << o.detail
        << "\n";
  }
  out << failures << " of " << outcomes.size() << " criteria failed\n";
  return failures;
}

}  // namespace sgn::acceptance
