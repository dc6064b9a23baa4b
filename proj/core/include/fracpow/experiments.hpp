#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracpow/assembly.hpp"
#include "fracpow/field.hpp"
#include "fracpow/sincquad.hpp"

namespace fracpow {

enum class ExperimentKind { HConvergence, KConvergence, BoundaryLayer, OracleCheck };

std::string kind_name(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::HConvergence;
  std::vector<double> beta_list;
  double b = 1.0;
  std::vector<int> levels;
  std::vector<double> k_list;  // quadrature steps (balanced rule)
  std::vector<long> n_list;    // symmetric-rule node counts; takes precedence over k_list
  double solver_tol = 1e-10;
  std::string output_path;
  int threads = 0;  // 0 = hardware concurrency
  bool full = false;
  bool check = false;
  bool plot = false;
};

ExperimentConfig default_config(ExperimentKind kind);

/// Rejects bad beta/level/tolerance values before any allocation. Forward
/// runs are capped at level 8 and oracle runs at level 6 (desk-scale
/// defaults; the full boundary-layer reproduction switches itself to level 8).
void validate(const ExperimentConfig& cfg);

/// INI-style config: one [section] per experiment name, key = value lines,
/// lists comma-separated. '#' and ';' start comments.
std::vector<ExperimentConfig> parse_config_file(const std::string& path);

struct ResultRow {
  std::string experiment;
  double beta = 0.0;
  double b = 0.0;
  int level = 0;
  double h = 0.0;
  double k = 0.0;
  long node_count = 0;
  double error = 0.0;
  std::optional<double> rate;  // pairwise log2 ratio within a beta group
  double wall_time = 0.0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  long column_index(const std::string& name) const;
};

/// 17 significant digits, '.' decimal regardless of locale.
std::string format_value(double v);

// Verdict thresholds used by --check and the acceptance suite.
inline constexpr double kRateBandLow = 1.8;
inline constexpr double kRateBandHigh = 2.2;
inline constexpr double kDecayFitTolerance = 0.15;  // relative, against pi^2/2
inline constexpr double kOracleCheckTolerance = 1e-6;

struct HStudyResult {
  Table table;
  std::vector<ResultRow> rows;
  bool rates_in_band = false;  // last two rates of every beta within the band
};

struct KFit {
  double beta = 0.0;
  double fitted_decay = 0.0;  // c in log e = -c/k + const
  double relative_deviation = 0.0;
};

struct KStudyResult {
  Table table;
  std::vector<KFit> fits;
  double target_decay = 0.0;  // pi^2/2
  bool fit_ok = false;
};

struct LayerResult {
  Table profile;  // t, one u column per beta
  std::vector<double> maxima;
  std::vector<long> node_counts;  // quadrature nodes per beta
  bool strictly_decreasing = false;
  bool endpoints_zero = false;
};

struct OracleCheckResult {
  Table table;
  double worst_relative = 0.0;
  bool ok = false;
};

/// Mesh-refinement study of the manufactured fractional solution; k is
/// derived per level from the error estimate (target 0.01 h^2) unless the
/// config pins it, and is recorded in the k column.
HStudyResult run_h_convergence(const ExperimentConfig& cfg);

/// Quadrature-step study at a fixed level. With b = 0 and a dense-oracle
/// sized mesh the error is measured against the spectral oracle and rows
/// where it drops below the oracle's own discretization error are flagged
/// "floor"; otherwise the closed form serves as reference.
KStudyResult run_k_convergence(const ExperimentConfig& cfg);

/// Diagonal profiles of the fractional solution with f = 1; checks that the
/// profile maxima decrease strictly in beta and vanish at the corners.
LayerResult run_boundary_layer(const ExperimentConfig& cfg);

/// Sinc path vs dense spectral oracle, relative to ||pi_h f||.
OracleCheckResult run_oracle_check(const ExperimentConfig& cfg);

struct ExperimentOutcome {
  Table table;
  std::string summary;
  bool check_ok = true;
};
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// Comma-separated, header row, '.' decimal, newline-terminated.
void emit_csv(const Table& table, const std::string& path);

/// Gnuplot script referencing the emitted CSV.
void emit_plot_script(const Table& table, ExperimentKind kind, const std::string& csv_path,
                      const std::string& script_path);

}  // namespace fracpow
