#pragma once

#include "apland/benchmark.hpp"
#include "apland/rng.hpp"
#include "apland/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace apland {

struct Individual {
  Vector x;
  double fx = 0.0;
};

struct Population {
  std::vector<Individual> members;
  int iteration = 1;

  std::size_t size() const { return members.size(); }
  const Individual& operator[](std::size_t i) const { return members[i]; }
  Individual& operator[](std::size_t i) { return members[i]; }
};

class Archive {
 public:
  explicit Archive(std::size_t capacity) : capacity_(capacity) {}

  // Appends, then evicts uniformly random members until within capacity.
  void insert(Individual ind, Rng& rng);

  std::size_t size() const { return members_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::vector<Individual>& members() const { return members_; }
  const Individual& operator[](std::size_t k) const { return members_[k]; }

 private:
  std::size_t capacity_;
  std::vector<Individual> members_;
};

struct MutationStrategy {
  enum class Kind { kRand1, kCurrentToPBest1 };
  Kind kind = Kind::kCurrentToPBest1;
  double p = 0.05;

  static MutationStrategy rand1() { return {Kind::kRand1, 0.0}; }
  static MutationStrategy current_to_pbest1(double p = 0.05) {
    return {Kind::kCurrentToPBest1, p};
  }

  // max(floor(n p), 2), capped at n.
  std::size_t pbest_pool(std::size_t n) const;
};

enum class BoundaryRepair { kMidpoint, kClamp };

// All random quantities behind one individual's trial vector. Replaying
// generate_trial with the same factors and parameter pair reproduces the
// trial bit for bit, which is what lets the profiler score alternative
// pairs in the same stochastic context as the actual search step.
struct FrozenFactors {
  // rand/1: {r1, r2, r3}. current-to-pbest/1: {r1}.
  std::vector<std::size_t> parents;
  Vector s;
  std::size_t j_rand = 0;  // 0-based
  // current-to-pbest/1 only: population index of the chosen top-p member.
  std::optional<std::size_t> pbest_index;
  // current-to-pbest/1 only: index into P followed by A, and its vector.
  std::optional<std::size_t> union_index;
  Vector archive_pick;
};

struct Trial {
  Vector u;
  double fu = 0.0;
};

Population initialize_population(std::size_t n, const BenchmarkFunction& f,
                                 EvaluationCounter& counter, Rng& rng);

// Population indices sorted by fx ascending, ties by index.
std::vector<std::size_t> sort_by_fitness(const Population& pop);

FrozenFactors draw_frozen_factors(const Population& pop, std::size_t i,
                                  const MutationStrategy& strategy, const Archive& archive,
                                  Rng& rng);

// As above with the fitness ordering precomputed once per iteration.
FrozenFactors draw_frozen_factors(const Population& pop, std::size_t i,
                                  const MutationStrategy& strategy, const Archive& archive,
                                  std::span<const std::size_t> order, Rng& rng);

Vector mutate(const Population& pop, std::size_t i, const ParameterPair& theta,
              const FrozenFactors& ff, const MutationStrategy& strategy);

Vector crossover_binomial(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& v,
                          double C, const FrozenFactors& ff);

// Pulls coordinates outside [lower, upper] back inside relative to the parent.
void repair_bounds(Vector& u, const Eigen::Ref<const Vector>& parent, double lower, double upper,
                   BoundaryRepair repair);

Trial generate_trial(const Population& pop, std::size_t i, const ParameterPair& theta,
                     const FrozenFactors& ff, const MutationStrategy& strategy,
                     const BenchmarkFunction& f, EvaluationCounter& counter, bool counted,
                     BoundaryRepair repair = BoundaryRepair::kMidpoint);

// Per-index outcome of one round of pairwise selection.
struct SuccessRecords {
  std::vector<bool> success;
  std::vector<ParameterPair> pairs;
};

// Trials are matched to population members by index. A missing trial
// (std::nullopt) leaves the parent in place and counts as a failure; this
// happens only when the budget runs out mid-iteration.
SuccessRecords select_and_update(Population& pop, Archive& archive,
                                 std::span<const std::optional<Trial>> trials,
                                 std::span<const ParameterPair> pairs, Rng& archive_rng);

}  // namespace apland
