#include "apland/cli.hpp"

#include "apland/benchmark.hpp"
#include "apland/config.hpp"
#include "apland/harness.hpp"
#include "apland/io.hpp"
#include "apland/measures.hpp"
#include "apland/render.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace apland {

namespace {

std::vector<RunRecord> load_run_records(const fs::path& path) {
  const fs::path file = fs::is_directory(path) ? path / "runs.jsonl" : path;
  std::vector<RunRecord> records;
  std::istringstream in(read_text_file(file));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(run_record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw IoError(file.string() + ": " + e.what());
    }
  }
  return records;
}

}  // namespace

int cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive parameter landscape profiler for differential evolution", "apland"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "out";
  bool dump_population = false;
  auto* run = app.add_subcommand("run", "Execute a campaign from a config file");
  run->add_option("--config", config_path, "Config file (key = value)")->required();
  run->add_option("--seed", seed, "Master seed; overrides the config");
  run->add_option("--out-dir", out_dir, "Output root");
  run->add_flag("--dump-population", dump_population, "Write population.jsonl per run");

  std::string median_path;
  auto* median = app.add_subcommand("median", "Pick the median run of a campaign");
  median->add_option("campaign", median_path, "Campaign directory or runs.jsonl")->required();

  std::string snapshot_path;
  std::string measure_output;
  auto* measure = app.add_subcommand("measure", "Compute FDC, DISP and NZR for snapshots");
  measure->add_option("snapshots", snapshot_path, "Snapshot directory or CSV")->required();
  measure->add_option("--output", measure_output, "Write JSONL here instead of stdout");

  std::vector<std::string> measure_files;
  std::string aggregate_output;
  auto* aggregate = app.add_subcommand("aggregate", "Average measures per checkpoint and rank");
  aggregate->add_option("measures", measure_files, "measures.jsonl files")->required();
  aggregate->add_option("--output", aggregate_output, "Write CSV here instead of stdout");

  std::string render_path;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Render snapshot heatmaps as SVG");
  render->add_option("snapshots", render_path, "Snapshot directory or CSV")->required();
  render->add_option("--out-dir", render_out, "Directory for SVGs (default: next to each CSV)");

  auto* functions = app.add_subcommand("functions", "List the benchmark catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "apland: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*run) {
      if (!fs::exists(config_path)) {
        err << "apland: config file not found: " << config_path << "\n";
        return kExitUsage;
      }
      const std::string source = read_text_file(config_path);
      ExperimentConfig config;
      try {
        config = parse_config(source, config_path);
        if (seed) config.seed = *seed;
        if (dump_population) config.dump_population = true;
        config.validate();
      } catch (const ConfigError& e) {
        err << "apland: " << e.what() << "\n";
        return kExitUsage;
      }
      const CampaignResult result = run_experiment(config, out_dir, source);
      out << result.dir.string() << "\n";
      out << "median run: " << result.median_run << "\n";
    } else if (*median) {
      out << select_median_run(load_run_records(median_path)) << "\n";
    } else if (*measure) {
      std::string jsonl;
      for (const auto& csv : find_snapshots(snapshot_path)) {
        jsonl += to_json(measure_snapshot(read_snapshot(csv))).dump() + "\n";
      }
      if (measure_output.empty()) out << jsonl;
      else write_text_file(measure_output, jsonl);
    } else if (*aggregate) {
      std::vector<MeasureRecord> records;
      for (const auto& file : measure_files) {
        auto part = read_measures(file);
        records.insert(records.end(), part.begin(), part.end());
      }
      const std::string csv = trend_csv(aggregate_measures(records));
      if (aggregate_output.empty()) out << csv;
      else write_text_file(aggregate_output, csv);
    } else if (*render) {
      for (const auto& csv : find_snapshots(render_path)) {
        const LandscapeSnapshot snap = read_snapshot(csv);
        const auto svg = render_contour_svg(snap);
        if (!svg) {
          out << "skipped flat landscape: " << csv.string() << "\n";
          continue;
        }
        fs::path target = csv;
        target.replace_extension(".svg");
        if (!render_out.empty()) {
          target = fs::path(render_out) / (std::to_string(snap.meta.fe) + "-rank" +
                                           std::to_string(snap.meta.individual_rank) + ".svg");
        }
        write_text_file(target, *svg);
        out << target.string() << "\n";
      }
    } else if (*functions) {
      out << "name,category,rotated\n";
      for (const auto& e : function_catalog()) {
        out << e.name << "," << to_string(e.category) << "," << (e.rotated ? "yes" : "no")
            << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "apland: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "apland: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace apland
