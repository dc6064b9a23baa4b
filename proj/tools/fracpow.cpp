// Command-line driver for the fractional convection-diffusion experiments:
// mesh-refinement and quadrature-step convergence studies, boundary-layer
// profiles, and the sinc-vs-spectral oracle check. Each run writes a CSV
// (and optionally a gnuplot script) and prints a short summary.

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "fracpow/errors.hpp"
#include "fracpow/experiments.hpp"

namespace {

struct FlagOverrides {
  std::vector<double> beta;
  double b = 0.0;
  std::vector<int> levels;
  std::vector<double> k;
  std::vector<long> n;
  double tol = 0.0;
  std::string out;
  int threads = -1;
  bool full = false;
  bool check = false;
  bool plot = false;

  bool has_beta = false, has_b = false, has_levels = false, has_k = false, has_n = false,
       has_tol = false, has_out = false, has_threads = false;
};

void add_common_flags(CLI::App* cmd, FlagOverrides& f) {
  cmd->add_option("--beta", f.beta, "fractional orders in (0,1)")
      ->each([&f](const std::string&) { f.has_beta = true; });
  cmd->add_option("--b", f.b, "convection strength")
      ->each([&f](const std::string&) { f.has_b = true; });
  cmd->add_option("--levels", f.levels, "mesh refinement levels")
      ->each([&f](const std::string&) { f.has_levels = true; });
  cmd->add_option("--k", f.k, "quadrature steps (balanced rule)")
      ->each([&f](const std::string&) { f.has_k = true; });
  cmd->add_option("--n", f.n, "symmetric-rule node counts (overrides --k)")
      ->each([&f](const std::string&) { f.has_n = true; });
  cmd->add_option("--tol", f.tol, "linear solver tolerance")
      ->each([&f](const std::string&) { f.has_tol = true; });
  cmd->add_option("--out", f.out, "output CSV path")
      ->each([&f](const std::string&) { f.has_out = true; });
  cmd->add_option("--threads", f.threads, "worker threads for node solves (0 = auto)")
      ->each([&f](const std::string&) { f.has_threads = true; });
  cmd->add_flag("--full", f.full, "full-scale run (boundary layer: level 8, 401 points)");
  cmd->add_flag("--check", f.check, "exit nonzero unless the experiment's verdict passes");
  cmd->add_flag("--plot", f.plot, "also emit a gnuplot script next to the CSV");
}

void apply_overrides(fracpow::ExperimentConfig& cfg, const FlagOverrides& f) {
  if (f.has_beta) cfg.beta_list = f.beta;
  if (f.has_b) cfg.b = f.b;
  if (f.has_levels) cfg.levels = f.levels;
  if (f.has_k) cfg.k_list = f.k;
  if (f.has_n) cfg.n_list = f.n;
  if (f.has_tol) cfg.solver_tol = f.tol;
  if (f.has_out) cfg.output_path = f.out;
  if (f.has_threads) cfg.threads = f.threads;
  if (f.full) cfg.full = true;
  if (f.check) cfg.check = true;
  if (f.plot) cfg.plot = true;
}

std::string script_path_for(const std::string& csv_path) {
  const auto dotpos = csv_path.rfind('.');
  const std::string stem =
      (dotpos == std::string::npos || csv_path.find('/', dotpos) != std::string::npos)
          ? csv_path
          : csv_path.substr(0, dotpos);
  return stem + ".gp";
}

// returns 0 on success, 2 on a failed --check verdict
int execute(const fracpow::ExperimentConfig& cfg) {
  fracpow::ExperimentOutcome outcome = fracpow::run_experiment(cfg);

  fracpow::emit_csv(outcome.table, cfg.output_path);
  std::cout << "[" << fracpow::kind_name(cfg.experiment) << "] wrote " << cfg.output_path
            << " (" << outcome.table.rows.size() << " rows)\n";
  if (cfg.plot) {
    const std::string gp = script_path_for(cfg.output_path);
    fracpow::emit_plot_script(outcome.table, cfg.experiment, cfg.output_path, gp);
    std::cout << "[" << fracpow::kind_name(cfg.experiment) << "] wrote " << gp << "\n";
  }
  std::cout << outcome.summary;

  if (cfg.check && !outcome.check_ok) {
    std::cerr << "check failed for " << fracpow::kind_name(cfg.experiment) << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional elliptic solver: sinc-quadrature experiments on the unit square"};
  app.require_subcommand(1);

  FlagOverrides flags;
  std::string config_path;

  CLI::App* cmd_run = app.add_subcommand("run", "run every experiment in a config file");
  cmd_run->add_option("config", config_path, "INI-style config file")->required();
  add_common_flags(cmd_run, flags);

  CLI::App* cmd_h = app.add_subcommand("h-study", "mesh-refinement convergence study");
  add_common_flags(cmd_h, flags);
  CLI::App* cmd_k = app.add_subcommand("k-study", "quadrature-step convergence study");
  add_common_flags(cmd_k, flags);
  CLI::App* cmd_layer = app.add_subcommand("layer", "boundary-layer diagonal profiles");
  add_common_flags(cmd_layer, flags);
  CLI::App* cmd_oracle = app.add_subcommand("oracle-check", "sinc vs dense spectral oracle");
  add_common_flags(cmd_oracle, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    int status = 0;
    if (cmd_run->parsed()) {
      for (auto& cfg : fracpow::parse_config_file(config_path)) {
        apply_overrides(cfg, flags);
        status = std::max(status, execute(cfg));
      }
    } else {
      fracpow::ExperimentKind kind = fracpow::ExperimentKind::HConvergence;
      if (cmd_k->parsed()) kind = fracpow::ExperimentKind::KConvergence;
      if (cmd_layer->parsed()) kind = fracpow::ExperimentKind::BoundaryLayer;
      if (cmd_oracle->parsed()) kind = fracpow::ExperimentKind::OracleCheck;
      auto cfg = fracpow::default_config(kind);
      apply_overrides(cfg, flags);
      status = execute(cfg);
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
