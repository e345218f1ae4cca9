#pragma once

// Reproducible experiment runner: JSON config in, CSV tables out.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "exlab/covariance.hpp"
#include "exlab/csv.hpp"
#include "exlab/parallel.hpp"
#include "exlab/point_process.hpp"
#include "exlab/tail_analytics.hpp"

namespace exlab {

enum class ExperimentKind {
  prokhorov_ratio,   // E1
  poisson_limit,     // E2
  cluster_medium,    // E3
  dependent_berman,  // E4
  threshold_explore  // E5
};

std::string to_string(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::prokhorov_ratio;
  CovarianceModel model;
  std::uint64_t n = 0;
  LevelSchedule level;
  Normalization normalization = Normalization::psi;
  std::optional<IndexWindow> window;  // default [0, n)
  std::optional<double> lambda_cluster;
  std::uint64_t replications = 1;
  std::uint64_t master_seed = 0;
  std::filesystem::path output_dir = ".";
  unsigned workers = 0;  // 0: one per hardware thread

  // E1: (n, p) pairs.
  std::vector<std::pair<std::uint64_t, double>> grid;
  // E4, E5: sequence lengths.
  std::vector<std::uint64_t> n_grid;
  // E5: rho(1) values and level ratios u / sqrt(2 log n).
  std::vector<double> rho1_grid;
  std::vector<double> ratio_grid;
  std::string family = "geometric";  // E5 model family: geometric | power_decay
  double family_beta = 1.0;
  // E4: attach cluster simulations at each grid point.
  bool simulate = false;
  // Trailing-window end for the decay-condition proxies (0: min(n-1, 10^6)).
  std::uint64_t k_max = 0;

  std::string config_hash;  // FNV-1a of the canonical JSON
};

/// Throws ConfigError on missing or malformed fields.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parses a model object such as {"kind": "geometric", "rho0": 0.5}.
CovarianceModel parse_model(const nlohmann::json& doc);

struct ExperimentResult {
  std::string name;
  /// File stem -> table; every experiment has "summary".
  std::map<std::string, CsvTable> tables;
  std::vector<std::string> warnings;
};

ExperimentResult run_E1_prokhorov_ratio(const ExperimentConfig& config);
ExperimentResult run_E2_poisson_limit(const ExperimentConfig& config);
ExperimentResult run_E3_cluster_medium(const ExperimentConfig& config);
ExperimentResult run_E4_dependent_berman(const ExperimentConfig& config);
ExperimentResult run_E5_threshold_explore(const ExperimentConfig& config);

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Writes <output_dir>/<name>_<stem>.csv for every table.
void write_result(const ExperimentResult& result, const std::filesystem::path& output_dir);

}  // namespace exlab
