#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "acop/inference.hpp"

namespace acop {

enum class ExperimentKind { rmse_scaling, coverage, two_param };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::rmse_scaling;
  std::vector<std::string> families;  // family / model names
  std::vector<double> taus;
  std::vector<int> ns;
  std::vector<int> ds;
  int replications = 100;
  std::vector<double> levels;  // coverage only
  std::uint64_t seed = 42;
  int workers = 1;
  double h = 0.25;           // one-parameter initial-interval half width (tau units)
  double h_minus = 0.0, h_plus = 0.0, epsilon = 0.005;  // two-parameter boxes
  int mc_info_size = 10000;  // expected-information MC sample size
  std::string out_records;   // CSV path ("" = skip)
  std::string out_summary;   // JSON path ("" = stdout)
};

/// Parse the key = value config format (see docs/experiments.md).
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::string& path);

struct ExperimentRecord {
  std::string family;
  double tau = 0.0;
  int n = 0, d = 0;
  int replication = 0;
  ParamVector theta_true, theta_hat;
  bool ok = false;
  double seconds = 0.0;
  // coverage runs: hit flag per (level, method)
  std::vector<int> hits;
};

struct CellSummary {
  std::string family;
  double tau = 0.0;
  int n = 0, d = 0;
  int replications = 0, failures = 0;
  std::vector<double> bias, rmse;      // per coordinate
  std::vector<double> coverage;        // per (level, method), coverage runs
  double mean_seconds = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRecord> records;
  std::vector<CellSummary> cells;
  std::map<std::string, double> slopes;  // rmse_scaling: per-family log-log slope
};

ExperimentResult run_rmse_scaling(const ExperimentConfig& cfg);
ExperimentResult run_coverage(const ExperimentConfig& cfg);
ExperimentResult run_two_param(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Records as CSV with the fixed header; timing column included.
void write_records_csv(const ExperimentResult& r, std::ostream& out);

/// Deterministic summary JSON: aggregates only, no timing, so identical
/// config + seed reproduces the bytes. Timing goes to a separate report.
std::string summary_json(const ExperimentResult& r);

/// Wall-clock summary (environment-specific, excluded from summary_json).
std::string timing_json(const ExperimentResult& r);

/// Ordinary least squares slope of y on x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace acop
