#pragma once

#include "apland/engine.hpp"
#include "apland/measures.hpp"
#include "apland/profiler.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace apland {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Shortest round-trip decimal form.
std::string format_double(double value);

std::string read_text_file(const fs::path& path);
void write_text_file(const fs::path& path, const std::string& content);

json to_json(const ParameterPair& pair);
ParameterPair pair_from_json(const json& j);

json metadata_json(const LandscapeSnapshot& snap);
std::string snapshot_csv(const LandscapeSnapshot& snap);

// Writes <dir>/<rank>.csv and its <dir>/<rank>.json sidecar; returns the CSV path.
fs::path write_snapshot(const fs::path& dir, const LandscapeSnapshot& snap);
// Loads a snapshot from its CSV path (the sidecar must sit next to it).
LandscapeSnapshot read_snapshot(const fs::path& csv_path);

// All snapshot CSVs below `root`, in sorted path order.
std::vector<fs::path> find_snapshots(const fs::path& root);

json to_json(const MeasureRecord& rec);
MeasureRecord measure_from_json(const json& j);
std::vector<MeasureRecord> read_measures(const fs::path& jsonl);

json to_json(const TraceRow& row);

}  // namespace apland
