#pragma once

#include "apland/config.hpp"
#include "apland/engine.hpp"
#include "apland/io.hpp"
#include "apland/measures.hpp"
#include "apland/profiler.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace apland {

struct RunRecord {
  std::uint64_t run_index = 0;
  double final_error = 0.0;
  std::uint64_t fe_at_best = 0;
  std::vector<TraceRow> trace;
  EvaluationCounter counter;
  std::size_t snapshots = 0;
};

// A reporting checkpoint: the FE the analysis asks for and the captured
// checkpoint it was snapped to.
struct ReportPoint {
  std::string label;
  std::uint64_t requested = 0;
  std::uint64_t snapped = 0;
};

struct SnapshotSchedule {
  std::vector<std::uint64_t> checkpoints;
  std::vector<ReportPoint> report;
};

// Checkpoints fire on the first iteration and then on the first iteration
// whose starting FE count reaches the next multiple of `cadence`.
class CheckpointClock {
 public:
  explicit CheckpointClock(std::uint64_t cadence) : cadence_(cadence) {}
  bool fires(int iteration, std::uint64_t fe_at_start);

 private:
  std::uint64_t cadence_;
  std::uint64_t next_ = 0;
};

// Report FEs {first, floor(0.5 fe_stop), floor(0.75 fe_stop), fe_stop}, each
// snapped to the nearest captured checkpoint (earlier one on ties).
SnapshotSchedule make_schedule(std::vector<std::uint64_t> checkpoints, std::uint64_t fe_stop);

// rank[i] for every individual: 1 = lowest objective, ties by index.
std::vector<std::size_t> rank_individuals(const Population& pop);

// Run index of the median record under (final error, fe_at_best) order.
std::uint64_t select_median_run(const std::vector<RunRecord>& records);

struct RunOutput {
  RunRecord record;
  SnapshotSchedule schedule;
  std::vector<MeasureRecord> measures;
  std::vector<LandscapeSnapshot> snapshots;  // only with keep_snapshots
};

struct RunOptions {
  std::optional<std::filesystem::path> run_dir;  // persist artifacts here
  bool keep_snapshots = false;
};

// One seeded run. Profiling (if enabled in the config) rides along without
// touching the search streams or the counted budget.
RunOutput run_single(const ExperimentConfig& config, std::uint64_t run_index,
                     const RunOptions& options = {});

struct CampaignResult {
  std::filesystem::path dir;
  std::vector<RunRecord> records;
  std::uint64_t median_run = 0;
};

// Writes <out_root>/<config-hash>/ with the verbatim config, one run-<k>
// directory per run, runs.jsonl, median.json and aggregate.csv.
CampaignResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_root,
                              const std::string& config_source);

struct TrendRow {
  std::uint64_t fe = 0;
  std::size_t rank = 0;
  std::optional<double> fdc_mean;
  std::optional<double> disp_mean;
  double nzr_mean = 0.0;
  std::size_t n_defined = 0;  // records with every measure defined
  std::size_t n_records = 0;
};

// Mean of each defined measure per (fe, rank), ordered by fe then rank.
// Input order does not affect the output.
std::vector<TrendRow> aggregate_measures(const std::vector<MeasureRecord>& records);
std::string trend_csv(const std::vector<TrendRow>& rows);

json to_json(const RunRecord& record);
RunRecord run_record_from_json(const json& j);

}  // namespace apland
