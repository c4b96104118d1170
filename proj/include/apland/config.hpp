#pragma once

#include "apland/de.hpp"
#include "apland/engine.hpp"
#include "apland/pam.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace apland {

// Flat `key = value` text, one entry per line, `#` starts a comment and
// string values may be double-quoted (so small TOML files parse as-is).
//
//   function        catalog name                        (sphere)
//   function_seed   shift/rotation seed                 (1)
//   dimension       d                                   (10)
//   population      n                                   (100)
//   budget          counted evaluations, 0 = 10000*d    (0)
//   runs            independent runs                    (15)
//   pam             pjde | pjade | pshade | fixed:F:C   (pshade)
//   tau_f tau_c     P-jDE resampling probabilities      (0.1 0.1)
//   jade_c          P-JADE learning rate                (0.1)
//   shade_h         P-SHADE memory size                 (10)
//   strategy        current-to-pbest/1 | rand/1         (current-to-pbest/1)
//   p               pbest greediness                    (0.05)
//   archive_capacity  0 = population                    (0)
//   repair          midpoint | clamp                    (midpoint)
//   stop_at_target  stop once the error floors to 0     (true)
//   profile         capture landscapes                  (true)
//   grid_f grid_c   grid resolution                     (50 50)
//   ranks           comma list of ranks to profile      (25,50,75,100)
//   cadence         FEs between checkpoints             (1000)
//   render          write SVG heatmaps                  (true)
//   dump_population write population.jsonl per run      (false)
//   seed            master seed                         (1)
struct ExperimentConfig {
  std::string function = "sphere";
  std::uint64_t function_seed = 1;
  int dimension = 10;
  std::size_t population = 100;
  std::uint64_t budget = 0;
  int runs = 15;
  std::string pam = "pshade";
  PamSettings pam_settings;
  MutationStrategy strategy = MutationStrategy::current_to_pbest1(0.05);
  std::size_t archive_capacity = 0;
  BoundaryRepair repair = BoundaryRepair::kMidpoint;
  bool stop_at_target = true;
  bool profile = true;
  int grid_f = 50;
  int grid_c = 50;
  std::vector<std::size_t> ranks{25, 50, 75, 100};
  std::uint64_t cadence = 1000;
  bool render = true;
  bool dump_population = false;
  std::uint64_t seed = 1;

  std::uint64_t effective_budget() const;
  SearchSettings search_settings() const;
  // Throws ConfigError on any violated invariant.
  void validate() const;
};

ExperimentConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

// Canonical rendering of every key; parse_config(to_text(c)) == c.
std::string to_text(const ExperimentConfig& config);

// 16 hex digits of FNV-1a over the canonical text.
std::string config_hash(const ExperimentConfig& config);

}  // namespace apland
