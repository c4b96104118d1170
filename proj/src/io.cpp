#include "apland/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace apland {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

json to_json(const ParameterPair& pair) { return json{{"F", pair.F}, {"C", pair.C}}; }

ParameterPair pair_from_json(const json& j) {
  return {j.at("F").get<double>(), j.at("C").get<double>()};
}

json metadata_json(const LandscapeSnapshot& snap) {
  const auto& m = snap.meta;
  return json{{"run_id", m.run_id},
              {"function", m.function},
              {"function_seed", m.function_seed},
              {"d", m.dimension},
              {"t", m.iteration},
              {"fe", m.fe},
              {"i", m.individual_index},
              {"rank", m.individual_rank},
              {"k_F", snap.grid.k_F},
              {"k_C", snap.grid.k_C},
              {"best_index", snap.best_index},
              {"best_pair", to_json(snap.best_pair)},
              {"actual_pair", to_json(snap.actual_pair)},
              {"flat", snap.flat}};
}

std::string snapshot_csv(const LandscapeSnapshot& snap) {
  std::string out = "F,C,g1,g1_norm\n";
  for (Eigen::Index k = 0; k < snap.grid.size(); ++k) {
    out += format_double(snap.grid.pairs(k, 0));
    out += ',';
    out += format_double(snap.grid.pairs(k, 1));
    out += ',';
    out += format_double(snap.g1[k]);
    out += ',';
    out += format_double(snap.g1_norm[k]);
    out += '\n';
  }
  return out;
}

fs::path write_snapshot(const fs::path& dir, const LandscapeSnapshot& snap) {
  const std::string stem = std::to_string(snap.meta.individual_rank);
  const fs::path csv = dir / (stem + ".csv");
  write_text_file(csv, snapshot_csv(snap));
  write_text_file(dir / (stem + ".json"), metadata_json(snap).dump(2) + "\n");
  return csv;
}

namespace {

double parse_field(std::string_view field, const fs::path& path, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": malformed number '" +
                  std::string(field) + "'");
  }
  return v;
}

}  // namespace

LandscapeSnapshot read_snapshot(const fs::path& csv_path) {
  fs::path meta_path = csv_path;
  meta_path.replace_extension(".json");
  json meta;
  try {
    meta = json::parse(read_text_file(meta_path));
  } catch (const json::exception& e) {
    throw IoError(meta_path.string() + ": " + e.what());
  }

  LandscapeSnapshot snap;
  try {
    snap.meta.run_id = meta.at("run_id").get<std::uint64_t>();
    snap.meta.function = meta.at("function").get<std::string>();
    snap.meta.function_seed = meta.at("function_seed").get<std::uint64_t>();
    snap.meta.dimension = meta.at("d").get<Eigen::Index>();
    snap.meta.iteration = meta.at("t").get<int>();
    snap.meta.fe = meta.at("fe").get<std::uint64_t>();
    snap.meta.individual_index = meta.at("i").get<std::size_t>();
    snap.meta.individual_rank = meta.at("rank").get<std::size_t>();
    snap.grid.k_F = meta.at("k_F").get<int>();
    snap.grid.k_C = meta.at("k_C").get<int>();
    snap.best_index = meta.at("best_index").get<Eigen::Index>();
    snap.best_pair = pair_from_json(meta.at("best_pair"));
    snap.actual_pair = pair_from_json(meta.at("actual_pair"));
    snap.flat = meta.at("flat").get<bool>();
  } catch (const json::exception& e) {
    throw IoError(meta_path.string() + ": " + e.what());
  }

  const auto m = static_cast<Eigen::Index>(snap.grid.k_F) * snap.grid.k_C;
  snap.grid.pairs.resize(m, 2);
  snap.g1.resize(m);
  snap.g1_norm.resize(m);

  std::istringstream in(read_text_file(csv_path));
  std::string line;
  std::getline(in, line);
  if (line != "F,C,g1,g1_norm") throw IoError(csv_path.string() + ": unexpected header");
  Eigen::Index k = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (k >= m) throw IoError(csv_path.string() + ": more rows than the grid holds");
    std::string_view rest(line);
    double fields[4];
    for (int c = 0; c < 4; ++c) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (c == 3)) {
        throw IoError(csv_path.string() + ":" + std::to_string(lineno) + ": expected 4 columns");
      }
      fields[c] = parse_field(rest.substr(0, comma), csv_path, lineno);
      if (c < 3) rest.remove_prefix(comma + 1);
    }
    snap.grid.pairs(k, 0) = fields[0];
    snap.grid.pairs(k, 1) = fields[1];
    snap.g1[k] = fields[2];
    snap.g1_norm[k] = fields[3];
    ++k;
  }
  if (k != m) throw IoError(csv_path.string() + ": expected " + std::to_string(m) + " rows");
  return snap;
}

namespace {

// Orders digit runs by value so that 800/ sorts before 1000/.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const auto na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

std::vector<fs::path> find_snapshots(const fs::path& root) {
  std::vector<fs::path> out;
  if (fs::is_regular_file(root)) {
    out.push_back(root);
    return out;
  }
  if (!fs::is_directory(root)) throw IoError("no such snapshot path " + root.string());
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
    fs::path sidecar = entry.path();
    sidecar.replace_extension(".json");
    if (fs::exists(sidecar)) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end(), [](const fs::path& a, const fs::path& b) {
    return natural_less(a.generic_string(), b.generic_string());
  });
  return out;
}

json to_json(const MeasureRecord& rec) {
  json j{{"run_id", rec.meta.run_id},
         {"function", rec.meta.function},
         {"t", rec.meta.iteration},
         {"fe", rec.meta.fe},
         {"i", rec.meta.individual_index},
         {"rank", rec.meta.individual_rank},
         {"flat", rec.flat},
         {"nzr", rec.nzr}};
  j["fdc"] = rec.fdc ? json(*rec.fdc) : json(nullptr);
  if (!rec.fdc) j["fdc_reason"] = rec.fdc_reason;
  j["disp"] = rec.disp ? json(*rec.disp) : json(nullptr);
  if (!rec.disp) j["disp_reason"] = rec.disp_reason;
  return j;
}

MeasureRecord measure_from_json(const json& j) {
  MeasureRecord rec;
  rec.meta.run_id = j.at("run_id").get<std::uint64_t>();
  rec.meta.function = j.value("function", std::string{});
  rec.meta.iteration = j.value("t", 0);
  rec.meta.fe = j.at("fe").get<std::uint64_t>();
  rec.meta.individual_index = j.value("i", std::size_t{0});
  rec.meta.individual_rank = j.at("rank").get<std::size_t>();
  rec.flat = j.value("flat", false);
  rec.nzr = j.at("nzr").get<double>();
  if (!j.at("fdc").is_null()) rec.fdc = j["fdc"].get<double>();
  else rec.fdc_reason = j.value("fdc_reason", std::string{});
  if (!j.at("disp").is_null()) rec.disp = j["disp"].get<double>();
  else rec.disp_reason = j.value("disp_reason", std::string{});
  return rec;
}

std::vector<MeasureRecord> read_measures(const fs::path& jsonl) {
  std::vector<MeasureRecord> out;
  std::istringstream in(read_text_file(jsonl));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(measure_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw IoError(jsonl.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

json to_json(const TraceRow& row) {
  return json{{"t", row.iteration}, {"fe", row.fe}, {"error", row.error}};
}

}  // namespace apland
