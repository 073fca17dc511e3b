#pragma once

// Scenario sweeps with persistent CSV/JSON output.
//
// Config files are flat "key = value" lines ('#' starts a comment):
//   scenario  classic-bounds | advice | random-order | sparse | gnp |
//             regret-upper | regret-lower | greedy-order
//   family    instance family (scenario specific, see README)
//   graph     path to a graph file (optional)
//   n k p     integers;  eps prob budget  reals
//   algs      comma-separated algorithm keys
//   samples steps trials threads  counts;  seed  64-bit master seed
//   out       output directory

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "onlinecut/regret.hpp"

namespace onlinecut {

struct ExperimentConfig {
  std::string scenario;
  std::string family;
  std::string graph;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  double eps = 0.0;
  double prob = 0.0;
  std::vector<std::string> algs;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  double budget = 0.0;
  std::size_t trials = 0;
  std::string out;
  std::size_t threads = 1;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::vector<std::string> scenario_names();

/// The scenario's defaults (the desk-scale settings of each check).
ExperimentConfig default_config(const std::string& scenario);

/// Sets one key; throws std::invalid_argument for unknown keys or values
/// that do not parse as the key's type.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Parses a config file body on top of the scenario defaults (the
/// scenario key must be present).
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
/// Every key, one per line, in a fixed order; parse_config inverts it.
std::string to_text(const ExperimentConfig& config);

struct LongRow {
  std::string instance;
  std::string series;
  std::string metric;
  double value = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<LongRow> long_rows;
  std::map<std::string, double> stats;
  std::vector<std::string> notes;  // per-instance errors and caveats
  std::string predicate;
  bool passed = false;
  /// Per-instance regret traces, written under traces/.
  std::vector<std::pair<std::string, RegretTrace>> traces;
};

/// Runs the sweep; deterministic given the config (thread count included
/// or not). Capacity errors are recorded per instance in `notes` and fail
/// that row instead of aborting the sweep.
ExperimentResult run_scenario(const ExperimentConfig& config);

/// Writes <dir>/<scenario>.csv, <scenario>_summary.json and
/// <scenario>_long.csv (plus traces/<instance>.csv for regret sweeps).
void emit_report(const ExperimentResult& result, const std::string& dir);

/// The JSON summary as text (what emit_report writes).
std::string summary_json(const ExperimentResult& result);
std::string rows_csv(const ExperimentResult& result);
std::string long_csv(const ExperimentResult& result);

}  // namespace onlinecut
