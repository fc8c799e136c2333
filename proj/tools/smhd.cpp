// Command-line driver: simulate, convergence, conserve, operator-tests.
//
// Exit codes: 0 success, 1 a threshold or invariant failed, 2 bad
// configuration, 3 solver failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "smhd/checkpoint.hpp"
#include "smhd/config.hpp"
#include "smhd/diagnostics.hpp"
#include "smhd/error.hpp"
#include "smhd/verification.hpp"

namespace fs = std::filesystem;
using namespace smhd;

namespace {

enum Exit { kOk = 0, kThreshold = 1, kConfig = 2, kSolver = 3 };

struct Cli {
  std::string config_path;
  std::string out;
  bool quiet = false;
};

struct ThresholdFailure : Error {
  using Error::Error;
};

RunConfig load(const Cli& cli) {
  RunConfig cfg = cli.config_path.empty() ? RunConfig{} : load_config(cli.config_path);
  if (const char* env = std::getenv("SMHD_OUT_DIR"); env != nullptr && *env != '\0') cfg.out_dir = env;
  if (!cli.out.empty()) cfg.out_dir = cli.out;
  cfg.validate();
  return cfg;
}

fs::path prepare_out(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
  return dir;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw Error("cannot write '" + p.string() + "'");
  return f;
}

void preflight(const RunConfig& cfg, const std::vector<int>& levels) {
  for (int n : levels) {
    const ExactnessReport r = check_exactness(build_box_mesh(n), cfg.mutate_incidence);
    if (!r.ok()) throw ThresholdFailure("invariant violated: discrete complex is not exact (" + r.describe() + ")");
  }
}

int run_simulate(const Cli& cli) {
  const RunConfig cfg = load(cli);
  preflight(cfg, {cfg.n});
  const fs::path dir = prepare_out(cfg);
  const TetMesh mesh = build_box_mesh(cfg.n);
  const OperatorContext ctx(mesh, 0, {}, cfg.solver.exec);
  const MhdSolver solver(ctx, cfg.params, cfg.solver);
  const ManufacturedCase mc = build_case(cfg.case_name, cfg.params);
  const SourceTerms src = mc.sources();

  MhdState state = cfg.restart.empty() ? solver.init_state(mc.u, mc.B, src, 0.0) : load_checkpoint(cfg.restart, ctx);
  ConservationTracker tracker(solver);
  tracker.start(state);
  std::ofstream csv = open_out(dir / "diagnostics.csv");
  write_csv_header(csv);
  write_csv_row(csv, tracker.rows().back());

  for (int s = 1; s <= cfg.steps; ++s) {
    StepResult r = solver.step_midpoint(state, cfg.dt, src);
    const DiagnosticsRow& row = tracker.record(state, r, cfg.dt);
    write_csv_row(csv, row);
    state = std::move(r.state);
    if (!cli.quiet)
      std::cout << "step " << s << "  t = " << state.t << "  E = " << std::setprecision(12) << row.energy
                << "  div B = " << std::setprecision(3) << row.div_B_max << "  iterations = " << r.report.iterations
                << std::setprecision(6) << '\n';
    if (cfg.vtk_every > 0 && s % cfg.vtk_every == 0) {
      std::ofstream v = open_out(dir / ("state_" + std::to_string(s) + ".vtk"));
      write_state_vtk(v, ctx, state);
    }
    if (cfg.checkpoint_every > 0 && s % cfg.checkpoint_every == 0)
      save_checkpoint((dir / ("checkpoint_" + std::to_string(s) + ".txt")).string(), state, ctx);
  }
  save_checkpoint((dir / "checkpoint_final.txt").string(), state, ctx);

  const ConservationReport& rep = tracker.report();
  if (!cli.quiet)
    std::cout << "max div B " << rep.max_divergence << ", energy residual " << rep.max_energy_residual
              << ", helicity residuals " << rep.max_helicity_residual_m << " / " << rep.max_helicity_residual_c << '\n';
  if (rep.max_divergence > 1e-10)
    throw ThresholdFailure("invariant violated: max |div B| = " + std::to_string(rep.max_divergence));
  return kOk;
}

int run_conserve(const Cli& cli) {
  const RunConfig cfg = load(cli);
  preflight(cfg, {cfg.n});
  const fs::path dir = prepare_out(cfg);
  const TetMesh mesh = build_box_mesh(cfg.n);
  const OperatorContext ctx(mesh, 0, {}, cfg.solver.exec);
  const MhdSolver solver(ctx, cfg.params, cfg.solver);
  const ManufacturedCase mc = build_case(cfg.case_name, cfg.params);
  const SourceTerms src = mc.sources();
  const bool closed = cfg.params.is_ideal() && !mc.forced;

  MhdState state = solver.init_state(mc.u, mc.B, src, 0.0);
  ConservationTracker tracker(solver, true);
  tracker.start(state);
  for (int s = 1; s <= cfg.steps; ++s) {
    StepResult r = solver.step_midpoint(state, cfg.dt, src);
    tracker.record(state, r, cfg.dt);
    state = std::move(r.state);
  }
  std::ofstream csv = open_out(dir / "conservation.csv");
  write_csv_header(csv);
  for (const auto& row : tracker.rows()) write_csv_row(csv, row);

  const ConservationReport& rep = tracker.report();
  struct Check {
    std::string name;
    double value, limit;
  };
  std::vector<Check> checks{{"max |div B|", rep.max_divergence, 1e-12},
                            {"energy identity residual", rep.max_energy_residual, cfg.conserve_tol},
                            {"magnetic helicity identity residual", rep.max_helicity_residual_m, cfg.conserve_tol},
                            {"cross helicity identity residual", rep.max_helicity_residual_c, cfg.conserve_tol},
                            {"helicity gauge difference", rep.gauge_difference, 1e-10}};
  if (closed) {
    checks.push_back({"energy drift", rep.energy_drift, cfg.conserve_tol});
    checks.push_back({"magnetic helicity drift", rep.magnetic_helicity_drift, cfg.conserve_tol});
    checks.push_back({"cross helicity drift", rep.cross_helicity_drift, cfg.conserve_tol});
  }
  bool ok = true;
  for (const auto& c : checks) {
    const bool pass = c.value <= c.limit;
    ok = ok && pass;
    if (!cli.quiet || !pass)
      std::cout << (pass ? "PASS " : "FAIL ") << c.name << " = " << c.value << " (limit " << c.limit << ")\n";
  }
  if (!ok) throw ThresholdFailure("conservation check failed");
  return kOk;
}

int run_convergence_cmd(const Cli& cli) {
  const RunConfig cfg = load(cli);
  preflight(cfg, cfg.levels);
  const fs::path dir = prepare_out(cfg);
  const ManufacturedCase mc = build_case(cfg.case_name, cfg.params);
  if (!mc.forced && cfg.case_name != "zero")
    throw ConfigError("case '" + cfg.case_name + "' is initial data only; convergence needs a manufactured solution");
  ConvergenceOptions opt;
  opt.levels = cfg.levels;
  opt.final_time = cfg.final_time;
  opt.dt_factor = cfg.dt_factor;
  opt.solver = cfg.solver;
  const EocTable table = run_convergence(mc, opt);
  std::ofstream csv = open_out(dir / "convergence.csv");
  table.write_csv(csv);
  if (!cli.quiet) table.write_text(std::cout);
  const double m = table.min_rate();
  if (!(m >= cfg.min_eoc))
    throw ThresholdFailure("convergence order " + std::to_string(m) + " below " + std::to_string(cfg.min_eoc));
  return kOk;
}

int run_operator_tests(const Cli& cli) {
  const RunConfig cfg = load(cli);
  preflight(cfg, {1, 2, 3, 4});
  const fs::path dir = prepare_out(cfg);
  bool ok = true;
  auto report = [&](const std::string& name, double value, double limit, bool above = false) {
    const bool pass = above ? value >= limit : value <= limit;
    ok = ok && pass;
    if (!cli.quiet || !pass)
      std::cout << (pass ? "PASS " : "FAIL ") << name << " = " << value << (above ? " (min " : " (limit ") << limit
                << ")\n";
  };
  double commuting = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const TetMesh mesh = build_box_mesh(n);
    const OperatorContext ctx(mesh, 0, {}, cfg.solver.exec);
    for (const auto& e : commuting_fields()) commuting = std::max(commuting, ctx.commuting_check(e));
  }
  report("commuting residual", commuting, 1e-10);
  const OperatorRates rates = run_operator_rates(cfg.operator_levels, cfg.solver.exec);
  std::ofstream csv = open_out(dir / "operator_rates.csv");
  rates.table.write_csv(csv);
  if (!cli.quiet) rates.table.write_text(std::cout);
  report("minimum operator convergence order", rates.table.min_rate(), cfg.min_eoc, true);
  report("projection idempotence defect", rates.idempotence, 1e-12);
  if (!ok) throw ThresholdFailure("operator tests failed");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-preserving incompressible MHD on tetrahedral meshes"};
  app.require_subcommand(1);
  Cli cli;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", cli.config_path, "configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", cli.out, "output directory (overrides the config and SMHD_OUT_DIR)");
    sub->add_flag("--quiet", cli.quiet, "only report failures");
  };
  CLI::App* simulate = app.add_subcommand("simulate", "run a time-dependent simulation");
  CLI::App* convergence = app.add_subcommand("convergence", "manufactured-solution convergence study");
  CLI::App* conserve = app.add_subcommand("conserve", "check conservation laws and balance identities");
  CLI::App* operators = app.add_subcommand("operator-tests", "check the discrete complex and its projections");
  for (CLI::App* s : {simulate, convergence, conserve, operators}) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*simulate) return run_simulate(cli);
    if (*convergence) return run_convergence_cmd(cli);
    if (*conserve) return run_conserve(cli);
    if (*operators) return run_operator_tests(cli);
  } catch (const ThresholdFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kThreshold;
  } catch (const DivergenceError& e) {
    std::cerr << "error: invariant violated: " << e.what() << '\n';
    return kThreshold;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: invalid input: " << e.what() << '\n';
    return kConfig;
  } catch (const NonlinearSolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolver;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolver;
  }
  return kOk;
}
