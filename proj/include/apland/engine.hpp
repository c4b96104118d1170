#pragma once

#include "apland/benchmark.hpp"
#include "apland/de.hpp"
#include "apland/pam.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace apland {

struct SearchSettings {
  std::size_t population = 100;
  std::uint64_t budget = 100000;
  MutationStrategy strategy = MutationStrategy::current_to_pbest1(0.05);
  BoundaryRepair repair = BoundaryRepair::kMidpoint;
  // 0 means "same as population".
  std::size_t archive_capacity = 0;
  // Stop once the floored error reaches 0.
  bool stop_at_target = true;
};

struct TraceRow {
  int iteration = 0;
  std::uint64_t fe = 0;
  double error = 0.0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

// Everything fixed for one iteration once the actual trials exist and
// before selection. Observers may evaluate extra points (uncounted) but
// cannot touch the search state or its random streams.
struct IterationView {
  int iteration;
  std::uint64_t fe_at_start;
  const BenchmarkFunction& function;
  const SearchSettings& settings;
  const Population& population;
  const Archive& archive;
  std::span<const std::size_t> fitness_order;
  std::span<const ParameterPair> pairs;
  std::span<const FrozenFactors> factors;
  std::span<const std::optional<Trial>> trials;
  EvaluationCounter& counter;
};

class IterationObserver {
 public:
  virtual ~IterationObserver() = default;
  virtual void on_trials(const IterationView& view) = 0;
};

struct SearchResult {
  std::vector<TraceRow> trace;
  double best_fx = 0.0;
  double final_error = 0.0;
  std::uint64_t fe_at_best = 0;
  EvaluationCounter counter;
  Population population;
  int iterations = 0;
};

// Runs the DE loop with a PAM. Randomness comes from per-purpose streams
// derived from (master_seed, run_index); the observer sees every iteration
// and consumes none of them.
SearchResult run_search(const BenchmarkFunction& f, ParameterAdaptation& pam,
                        const SearchSettings& settings, std::uint64_t master_seed,
                        std::uint64_t run_index, IterationObserver* observer = nullptr);

}  // namespace apland
