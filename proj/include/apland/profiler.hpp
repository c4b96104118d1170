#pragma once

#include "apland/benchmark.hpp"
#include "apland/de.hpp"
#include "apland/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apland {

// Candidate (F, C) pairs scored for every profiled individual. Pairs are
// laid out row-major with F as the slow axis: index = a * k_C + b.
struct ParameterGrid {
  int k_F = 0;
  int k_C = 0;
  Pairs pairs;

  Eigen::Index size() const { return pairs.rows(); }
  ParameterPair operator[](Eigen::Index k) const { return {pairs(k, 0), pairs(k, 1)}; }
  // Cell coordinates (a, b) of pair index k.
  int f_index(Eigen::Index k) const { return static_cast<int>(k / k_C); }
  int c_index(Eigen::Index k) const { return static_cast<int>(k % k_C); }
};

// Endpoint-inclusive linspace over [0, 1] on both axes (F = 0 included).
ParameterGrid build_grid(int k_F, int k_C);

struct LandscapeMetadata {
  std::uint64_t run_id = 0;
  std::string function;
  std::uint64_t function_seed = 0;
  Eigen::Index dimension = 0;
  int iteration = 0;
  std::uint64_t fe = 0;
  std::size_t individual_index = 0;
  std::size_t individual_rank = 0;  // 1 = best
};

struct LandscapeSnapshot {
  LandscapeMetadata meta;
  ParameterGrid grid;
  Vector g1;
  Vector g1_norm;
  ParameterPair best_pair;
  Eigen::Index best_index = 0;
  ParameterPair actual_pair;
  bool flat = true;
  // Filled only when requested; one trial vector per grid cell.
  std::vector<Vector> trials;
};

// 1-step-lookahead greedy improvement of one pair: the objective gain of the
// replayed trial over its parent when strictly better, otherwise 0. The
// evaluation is uncounted.
double g1(const ParameterPair& theta, const Population& pop, std::size_t i,
          const FrozenFactors& ff, const MutationStrategy& strategy, const BenchmarkFunction& f,
          EvaluationCounter& counter, BoundaryRepair repair = BoundaryRepair::kMidpoint);

// Min-max rescale into [0, 1]. Constant input maps to all zeros and is
// flagged flat only if that constant is 0.
std::pair<Vector, bool> normalize_g1(const Eigen::Ref<const Vector>& g1);

// Lowest index attaining the maximum.
Eigen::Index argmax_first(const Eigen::Ref<const Vector>& values);

struct SnapshotOptions {
  BoundaryRepair repair = BoundaryRepair::kMidpoint;
  bool keep_trials = false;
};

LandscapeSnapshot snapshot_individual(const Population& pop, std::size_t i,
                                      const ParameterGrid& grid, const FrozenFactors& ff,
                                      const ParameterPair& actual_pair,
                                      const MutationStrategy& strategy,
                                      const BenchmarkFunction& f, EvaluationCounter& counter,
                                      LandscapeMetadata meta, SnapshotOptions options = {});

}  // namespace apland
