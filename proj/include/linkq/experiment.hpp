#pragma once

// Experiment configuration, CSV emission and the (strategy x seed) runner.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkq/bias.hpp"
#include "linkq/generators.hpp"
#include "linkq/graph.hpp"
#include "linkq/metrics.hpp"
#include "linkq/strategies.hpp"

namespace linkq {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  std::optional<std::filesystem::path> graph_path;
  std::optional<std::string> generator;  // "kind:params", see parse_generator
  std::uint64_t generator_seed = 1;
  std::vector<std::string> strategies;   // "name[:k]"
  std::string budget;                    // absolute count, or "2%" of all pairs
  std::vector<std::uint64_t> seeds;
  std::uint64_t stride = 1;
  unsigned jobs = 1;
  std::filesystem::path out_dir = "out";
  bool svg = false;
  bool tbf_dynamic = false;
};

/// Flat "key = value" text; '#' lines are comments. Keys: graph, gen,
/// gen_seed, strategy (repeatable, or comma separated), budget, seeds,
/// stride, jobs, out_dir, svg, tbf_dynamic.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one key/value (as from the config file or a CLI flag).
void apply_config_value(ExperimentConfig& config, const std::string& key, const std::string& value);

/// "1,2,5" or "base:count".
std::vector<std::uint64_t> parse_seeds(const std::string& text);

/// Resolves an absolute or percentage budget against the pair count.
std::uint64_t resolve_budget(const std::string& text, std::uint64_t total_pairs);

void validate(const ExperimentConfig& config);

/// Points kept when writing a trace: every stride-th q, plus q = length.
std::vector<std::pair<std::uint64_t, std::uint32_t>> downsample(const MeasurementTrace& trace, std::uint64_t stride);

struct TraceRow {
  std::string strategy;
  std::uint64_t seed = 0;
  std::uint64_t q = 0;
  std::uint32_t m_prime = 0;
  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

void write_trace_header(std::ostream& out);
void write_trace_rows(std::ostream& out, const std::string& strategy, std::uint64_t seed,
                      const std::vector<std::pair<std::uint64_t, std::uint32_t>>& points);
std::vector<TraceRow> read_trace_csv(std::istream& in);

struct RunResult {
  StrategySpec spec;
  std::string label;
  MeasurementTrace trace;  // full, padded to the budget
  EfficiencyReport report;
  SampleStats sample;
  bool report_valid = true;
};

struct ExperimentResult {
  Graph graph;
  std::vector<std::string> labels;  // empty for generated graphs
  std::uint64_t budget = 0;
  std::vector<RunResult> runs;      // ordered by (strategy index, seed index)
};

/// Loads or generates the graph named by the config.
std::pair<Graph, std::vector<std::string>> load_graph(const ExperimentConfig& config);

/// Runs every (strategy, seed) pair, up to config.jobs at a time. Results come
/// back in deterministic order whatever the scheduling.
ExperimentResult run_experiment_in_memory(const ExperimentConfig& config);

/// Runs the experiment and writes trace.csv, mean_trace.csv, report.csv,
/// bias.csv (plus labels.csv for file inputs and curves.svg when enabled)
/// into config.out_dir.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Table writers, one row per strategy label averaged over seeds.
void write_report_csv(std::ostream& out, const ExperimentResult& result);
void write_bias_csv(std::ostream& out, const GraphStats& reference,
                    const std::vector<std::pair<std::string, std::vector<SampleStats>>>& samples);
void write_mean_trace_csv(std::ostream& out, const ExperimentResult& result, std::uint64_t stride);

/// Replays the runs recorded in a trace CSV on g, checks that every saved row
/// matches the replay, and returns the per-strategy samples in file order.
/// Throws std::runtime_error on any mismatch.
std::vector<std::pair<std::string, std::vector<SampleStats>>> replay_samples(const Graph& g,
                                                                             const std::vector<TraceRow>& rows,
                                                                             bool tbf_dynamic = false);

}  // namespace linkq
