#include "apland/config.hpp"

#include "apland/benchmark.hpp"
#include "apland/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace apland {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& value, const std::string& where) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(where + ": invalid number '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& value, const std::string& where) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(where + ": invalid boolean '" + value + "'");
}

std::vector<std::size_t> parse_ranks(const std::string& value, const std::string& where) {
  std::string body = value;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::size_t> ranks;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    ranks.push_back(parse_number<std::size_t>(item, where));
  }
  return ranks;
}

std::string strategy_name(const MutationStrategy& s) {
  return s.kind == MutationStrategy::Kind::kRand1 ? "rand/1" : "current-to-pbest/1";
}

}  // namespace

std::uint64_t ExperimentConfig::effective_budget() const {
  return budget == 0 ? 10000ULL * static_cast<std::uint64_t>(dimension) : budget;
}

SearchSettings ExperimentConfig::search_settings() const {
  SearchSettings s;
  s.population = population;
  s.budget = effective_budget();
  s.strategy = strategy;
  s.repair = repair;
  s.archive_capacity = archive_capacity;
  s.stop_at_target = stop_at_target;
  return s;
}

void ExperimentConfig::validate() const {
  const auto& catalog = function_catalog();
  if (std::none_of(catalog.begin(), catalog.end(),
                   [&](const CatalogEntry& e) { return e.name == function; })) {
    throw ConfigError("unknown function '" + function + "'");
  }
  if (dimension < 2) throw ConfigError("dimension must be at least 2");
  if (population < 4) throw ConfigError("population must be at least 4");
  if (effective_budget() < population) throw ConfigError("budget must be at least population");
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (cadence < 1) throw ConfigError("cadence must be at least 1");
  if (grid_f < 2 || grid_c < 2) throw ConfigError("grid resolution must be at least 2");
  if (strategy.kind == MutationStrategy::Kind::kCurrentToPBest1 &&
      !(strategy.p > 0.0 && strategy.p <= 1.0)) {
    throw ConfigError("p must lie in (0, 1]");
  }
  for (std::size_t r : ranks) {
    if (r < 1 || r > population) {
      throw ConfigError("rank " + std::to_string(r) + " outside 1.." + std::to_string(population));
    }
  }
  make_pam(pam, population, pam_settings);
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }

    if (key == "function") c.function = value;
    else if (key == "function_seed") c.function_seed = parse_number<std::uint64_t>(value, where);
    else if (key == "dimension") c.dimension = parse_number<int>(value, where);
    else if (key == "population") c.population = parse_number<std::size_t>(value, where);
    else if (key == "budget") c.budget = parse_number<std::uint64_t>(value, where);
    else if (key == "runs") c.runs = parse_number<int>(value, where);
    else if (key == "pam") c.pam = value;
    else if (key == "tau_f") c.pam_settings.jde.tau_F = parse_number<double>(value, where);
    else if (key == "tau_c") c.pam_settings.jde.tau_C = parse_number<double>(value, where);
    else if (key == "jade_c") c.pam_settings.jade.c = parse_number<double>(value, where);
    else if (key == "shade_h") c.pam_settings.shade.H = parse_number<std::size_t>(value, where);
    else if (key == "strategy") {
      if (value == "rand/1") c.strategy.kind = MutationStrategy::Kind::kRand1;
      else if (value == "current-to-pbest/1") c.strategy.kind = MutationStrategy::Kind::kCurrentToPBest1;
      else throw ConfigError(where + ": unknown strategy '" + value + "'");
    } else if (key == "p") c.strategy.p = parse_number<double>(value, where);
    else if (key == "archive_capacity") c.archive_capacity = parse_number<std::size_t>(value, where);
    else if (key == "repair") {
      if (value == "midpoint") c.repair = BoundaryRepair::kMidpoint;
      else if (value == "clamp") c.repair = BoundaryRepair::kClamp;
      else throw ConfigError(where + ": unknown repair '" + value + "'");
    } else if (key == "stop_at_target") c.stop_at_target = parse_bool(value, where);
    else if (key == "profile") c.profile = parse_bool(value, where);
    else if (key == "grid_f") c.grid_f = parse_number<int>(value, where);
    else if (key == "grid_c") c.grid_c = parse_number<int>(value, where);
    else if (key == "ranks") c.ranks = parse_ranks(value, where);
    else if (key == "cadence") c.cadence = parse_number<std::uint64_t>(value, where);
    else if (key == "render") c.render = parse_bool(value, where);
    else if (key == "dump_population") c.dump_population = parse_bool(value, where);
    else if (key == "seed") c.seed = parse_number<std::uint64_t>(value, where);
    else throw ConfigError(where + ": unknown key '" + key + "'");
  }
  if (c.strategy.kind == MutationStrategy::Kind::kRand1) c.strategy.p = 0.0;
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text_file(path), path.string());
}

std::string to_text(const ExperimentConfig& c) {
  std::string ranks;
  for (std::size_t k = 0; k < c.ranks.size(); ++k) {
    if (k > 0) ranks += ",";
    ranks += std::to_string(c.ranks[k]);
  }
  std::ostringstream out;
  out << "function = " << c.function << "\n"
      << "function_seed = " << c.function_seed << "\n"
      << "dimension = " << c.dimension << "\n"
      << "population = " << c.population << "\n"
      << "budget = " << c.effective_budget() << "\n"
      << "runs = " << c.runs << "\n"
      << "pam = " << c.pam << "\n"
      << "tau_f = " << format_double(c.pam_settings.jde.tau_F) << "\n"
      << "tau_c = " << format_double(c.pam_settings.jde.tau_C) << "\n"
      << "jade_c = " << format_double(c.pam_settings.jade.c) << "\n"
      << "shade_h = " << c.pam_settings.shade.H << "\n"
      << "strategy = " << strategy_name(c.strategy) << "\n"
      << "p = " << format_double(c.strategy.p) << "\n"
      << "archive_capacity = " << c.archive_capacity << "\n"
      << "repair = " << (c.repair == BoundaryRepair::kMidpoint ? "midpoint" : "clamp") << "\n"
      << "stop_at_target = " << (c.stop_at_target ? "true" : "false") << "\n"
      << "profile = " << (c.profile ? "true" : "false") << "\n"
      << "grid_f = " << c.grid_f << "\n"
      << "grid_c = " << c.grid_c << "\n"
      << "ranks = " << ranks << "\n"
      << "cadence = " << c.cadence << "\n"
      << "render = " << (c.render ? "true" : "false") << "\n"
      << "dump_population = " << (c.dump_population ? "true" : "false") << "\n"
      << "seed = " << c.seed << "\n";
  return out.str();
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_text(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace apland
