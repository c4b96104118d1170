#include "apland/harness.hpp"

#include "apland/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace apland {

bool CheckpointClock::fires(int iteration, std::uint64_t fe_at_start) {
  if (iteration != 1 && fe_at_start < next_) return false;
  next_ = (fe_at_start / cadence_ + 1) * cadence_;
  return true;
}

SnapshotSchedule make_schedule(std::vector<std::uint64_t> checkpoints, std::uint64_t fe_stop) {
  SnapshotSchedule schedule;
  schedule.checkpoints = std::move(checkpoints);
  if (schedule.checkpoints.empty()) return schedule;
  const auto& cps = schedule.checkpoints;
  auto snap = [&](std::uint64_t fe) {
    std::uint64_t best = cps.front();
    for (std::uint64_t c : cps) {
      const auto dist = [fe](std::uint64_t v) { return v > fe ? v - fe : fe - v; };
      if (dist(c) < dist(best)) best = c;
    }
    return best;
  };
  const std::pair<const char*, std::uint64_t> requested[] = {
      {"first", cps.front()},
      {"0.5", fe_stop / 2},
      {"0.75", (3 * fe_stop) / 4},
      {"1", fe_stop},
  };
  for (const auto& [label, fe] : requested) schedule.report.push_back({label, fe, snap(fe)});
  return schedule;
}

std::vector<std::size_t> rank_individuals(const Population& pop) {
  const auto order = sort_by_fitness(pop);
  std::vector<std::size_t> rank(pop.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
  return rank;
}

std::uint64_t select_median_run(const std::vector<RunRecord>& records) {
  if (records.empty()) throw UsageError("median of an empty set of runs");
  std::vector<const RunRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const RunRecord* a, const RunRecord* b) {
    return std::tie(a->final_error, a->fe_at_best) < std::tie(b->final_error, b->fe_at_best);
  });
  return sorted[(sorted.size() - 1) / 2]->run_index;
}

namespace {

json population_json(const IterationView& view) {
  json members = json::array();
  for (const auto& ind : view.population.members) {
    members.push_back({{"x", std::vector<double>(ind.x.data(), ind.x.data() + ind.x.size())},
                       {"fx", ind.fx}});
  }
  return json{{"t", view.iteration}, {"fe", view.fe_at_start}, {"members", members}};
}

class CampaignObserver final : public IterationObserver {
 public:
  CampaignObserver(const ExperimentConfig& config, std::uint64_t run_index,
                   const BenchmarkFunction& f, const RunOptions& options)
      : config_(config),
        run_index_(run_index),
        function_(f),
        options_(options),
        clock_(config.cadence),
        grid_(build_grid(config.grid_f, config.grid_c)),
        ranks_(config.ranks) {
    std::sort(ranks_.begin(), ranks_.end());
    ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
  }

  void on_trials(const IterationView& view) override {
    if (config_.dump_population) population_ += population_json(view).dump() + "\n";
    if (!config_.profile || !clock_.fires(view.iteration, view.fe_at_start)) return;
    checkpoints_.push_back(view.fe_at_start);

    for (std::size_t rank : ranks_) {
      const std::size_t i = view.fitness_order[rank - 1];
      LandscapeMetadata meta;
      meta.run_id = run_index_;
      meta.function = function_.name();
      meta.function_seed = function_.seed();
      meta.dimension = function_.dimension();
      meta.iteration = view.iteration;
      meta.fe = view.fe_at_start;
      meta.individual_rank = rank;
      SnapshotOptions opts;
      opts.repair = config_.repair;
      LandscapeSnapshot snap =
          snapshot_individual(view.population, i, grid_, view.factors[i], view.pairs[i],
                              view.settings.strategy, function_, view.counter, meta, opts);
      measures_.push_back(measure_snapshot(snap));
      ++snapshot_count_;
      if (options_.run_dir) persist(snap);
      if (options_.keep_snapshots) snapshots_.push_back(std::move(snap));
    }
  }

  std::vector<std::uint64_t> checkpoints_;
  std::vector<MeasureRecord> measures_;
  std::vector<LandscapeSnapshot> snapshots_;
  std::string population_;
  std::size_t snapshot_count_ = 0;

 private:
  void persist(const LandscapeSnapshot& snap) {
    const fs::path dir = *options_.run_dir / "snapshots";
    write_snapshot(dir / std::to_string(snap.meta.fe), snap);
    if (!config_.render) return;
    if (auto svg = render_contour_svg(snap)) {
      write_text_file(dir / (std::to_string(snap.meta.fe) + "-rank" +
                             std::to_string(snap.meta.individual_rank) + ".svg"),
                      *svg);
    }
  }

  const ExperimentConfig& config_;
  std::uint64_t run_index_;
  const BenchmarkFunction& function_;
  const RunOptions& options_;
  CheckpointClock clock_;
  ParameterGrid grid_;
  std::vector<std::size_t> ranks_;
};

json schedule_json(const SnapshotSchedule& s) {
  json report = json::array();
  for (const auto& p : s.report) {
    report.push_back({{"label", p.label}, {"requested", p.requested}, {"snapped", p.snapped}});
  }
  return json{{"checkpoints", s.checkpoints}, {"report", report}};
}

}  // namespace

RunOutput run_single(const ExperimentConfig& config, std::uint64_t run_index,
                     const RunOptions& options) {
  config.validate();
  const BenchmarkFunction f =
      make_function(config.function, config.dimension, config.function_seed);
  auto pam = make_pam(config.pam, config.population, config.pam_settings);
  CampaignObserver observer(config, run_index, f, options);

  const SearchResult result =
      run_search(f, *pam, config.search_settings(), config.seed, run_index, &observer);

  RunOutput out;
  out.record.run_index = run_index;
  out.record.final_error = result.final_error;
  out.record.fe_at_best = result.fe_at_best;
  out.record.trace = result.trace;
  out.record.counter = result.counter;
  out.record.snapshots = observer.snapshot_count_;
  out.schedule = make_schedule(observer.checkpoints_, result.fe_at_best);
  out.measures = std::move(observer.measures_);
  out.snapshots = std::move(observer.snapshots_);

  if (options.run_dir) {
    const fs::path& dir = *options.run_dir;
    std::string trace;
    for (const auto& row : out.record.trace) trace += to_json(row).dump() + "\n";
    write_text_file(dir / "trace.jsonl", trace);
    std::string measures;
    for (const auto& m : out.measures) measures += to_json(m).dump() + "\n";
    write_text_file(dir / "measures.jsonl", measures);
    write_text_file(dir / "schedule.json", schedule_json(out.schedule).dump(2) + "\n");
    write_text_file(dir / "run.json", to_json(out.record).dump(2) + "\n");
    if (config.dump_population) write_text_file(dir / "population.jsonl", observer.population_);
  }
  return out;
}

CampaignResult run_experiment(const ExperimentConfig& config, const fs::path& out_root,
                              const std::string& config_source) {
  config.validate();
  CampaignResult campaign;
  campaign.dir = out_root / config_hash(config);
  write_text_file(campaign.dir / "config.txt", config_source);
  write_text_file(campaign.dir / "effective_config.txt", to_text(config));

  std::vector<MeasureRecord> all_measures;
  std::string runs_jsonl;
  for (int k = 1; k <= config.runs; ++k) {
    RunOptions options;
    options.run_dir = campaign.dir / ("run-" + std::to_string(k));
    RunOutput out = run_single(config, static_cast<std::uint64_t>(k), options);
    runs_jsonl += to_json(out.record).dump() + "\n";
    all_measures.insert(all_measures.end(), out.measures.begin(), out.measures.end());
    campaign.records.push_back(std::move(out.record));
    write_text_file(campaign.dir / "runs.jsonl", runs_jsonl);
  }
  campaign.median_run = select_median_run(campaign.records);
  write_text_file(campaign.dir / "median.json",
                  json{{"run", campaign.median_run}}.dump(2) + "\n");
  if (config.profile) {
    write_text_file(campaign.dir / "aggregate.csv", trend_csv(aggregate_measures(all_measures)));
  }
  return campaign;
}

std::vector<TrendRow> aggregate_measures(const std::vector<MeasureRecord>& records) {
  struct Bucket {
    std::vector<double> fdc, disp, nzr;
    std::size_t all_defined = 0;
  };
  std::map<std::pair<std::uint64_t, std::size_t>, Bucket> buckets;
  for (const auto& r : records) {
    auto& b = buckets[{r.meta.fe, r.meta.individual_rank}];
    if (r.fdc) b.fdc.push_back(*r.fdc);
    if (r.disp) b.disp.push_back(*r.disp);
    b.nzr.push_back(r.nzr);
    if (r.fdc && r.disp) ++b.all_defined;
  }
  // Sorting before summing makes the floating-point result order-free.
  auto mean = [](std::vector<double>& v) -> std::optional<double> {
    if (v.empty()) return std::nullopt;
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  };
  std::vector<TrendRow> rows;
  for (auto& [key, b] : buckets) {
    TrendRow row;
    row.fe = key.first;
    row.rank = key.second;
    row.fdc_mean = mean(b.fdc);
    row.disp_mean = mean(b.disp);
    row.nzr_mean = *mean(b.nzr);
    row.n_defined = b.all_defined;
    row.n_records = b.nzr.size();
    rows.push_back(row);
  }
  return rows;
}

std::string trend_csv(const std::vector<TrendRow>& rows) {
  std::string out = "fe,rank,fdc_mean,disp_mean,nzr_mean,n_defined\n";
  for (const auto& r : rows) {
    out += std::to_string(r.fe) + "," + std::to_string(r.rank) + ",";
    out += (r.fdc_mean ? format_double(*r.fdc_mean) : "") + ",";
    out += (r.disp_mean ? format_double(*r.disp_mean) : "") + ",";
    out += format_double(r.nzr_mean) + "," + std::to_string(r.n_defined) + "\n";
  }
  return out;
}

json to_json(const RunRecord& r) {
  return json{{"run", r.run_index},          {"final_error", r.final_error},
              {"fe_at_best", r.fe_at_best},  {"counted", r.counter.counted},
              {"uncounted", r.counter.uncounted}, {"snapshots", r.snapshots}};
}

RunRecord run_record_from_json(const json& j) {
  RunRecord r;
  r.run_index = j.at("run").get<std::uint64_t>();
  r.final_error = j.at("final_error").get<double>();
  r.fe_at_best = j.at("fe_at_best").get<std::uint64_t>();
  r.counter.counted = j.value("counted", std::uint64_t{0});
  r.counter.uncounted = j.value("uncounted", std::uint64_t{0});
  r.snapshots = j.value("snapshots", std::size_t{0});
  return r;
}

}  // namespace apland
