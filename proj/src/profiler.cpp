#include "apland/profiler.hpp"

#include <cmath>

namespace apland {

ParameterGrid build_grid(int k_F, int k_C) {
  if (k_F < 2 || k_C < 2) throw ConfigError("grid resolution must be at least 2 per axis");
  ParameterGrid grid;
  grid.k_F = k_F;
  grid.k_C = k_C;
  const Vector f_axis = Vector::LinSpaced(k_F, 0.0, 1.0);
  const Vector c_axis = Vector::LinSpaced(k_C, 0.0, 1.0);
  grid.pairs.resize(static_cast<Eigen::Index>(k_F) * k_C, 2);
  for (int a = 0; a < k_F; ++a) {
    for (int b = 0; b < k_C; ++b) {
      const Eigen::Index k = static_cast<Eigen::Index>(a) * k_C + b;
      grid.pairs(k, 0) = f_axis[a];
      grid.pairs(k, 1) = c_axis[b];
    }
  }
  return grid;
}

double g1(const ParameterPair& theta, const Population& pop, std::size_t i,
          const FrozenFactors& ff, const MutationStrategy& strategy, const BenchmarkFunction& f,
          EvaluationCounter& counter, BoundaryRepair repair) {
  const Trial trial = generate_trial(pop, i, theta, ff, strategy, f, counter, false, repair);
  const double fx = pop[i].fx;
  return trial.fu < fx ? std::abs(fx - trial.fu) : 0.0;
}

std::pair<Vector, bool> normalize_g1(const Eigen::Ref<const Vector>& g1) {
  const double lo = g1.minCoeff();
  const double hi = g1.maxCoeff();
  if (hi == lo) return {Vector::Zero(g1.size()), hi == 0.0};
  return {((g1.array() - lo) / (hi - lo)).matrix(), false};
}

Eigen::Index argmax_first(const Eigen::Ref<const Vector>& values) {
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < values.size(); ++k) {
    if (values[k] > values[best]) best = k;
  }
  return best;
}

LandscapeSnapshot snapshot_individual(const Population& pop, std::size_t i,
                                      const ParameterGrid& grid, const FrozenFactors& ff,
                                      const ParameterPair& actual_pair,
                                      const MutationStrategy& strategy,
                                      const BenchmarkFunction& f, EvaluationCounter& counter,
                                      LandscapeMetadata meta, SnapshotOptions options) {
  LandscapeSnapshot snap;
  snap.meta = std::move(meta);
  snap.meta.individual_index = i;
  snap.grid = grid;
  snap.actual_pair = actual_pair;
  snap.g1.resize(grid.size());
  if (options.keep_trials) snap.trials.reserve(static_cast<std::size_t>(grid.size()));

  const double fx = pop[i].fx;
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const Trial trial =
        generate_trial(pop, i, grid[k], ff, strategy, f, counter, false, options.repair);
    snap.g1[k] = trial.fu < fx ? std::abs(fx - trial.fu) : 0.0;
    if (options.keep_trials) snap.trials.push_back(trial.u);
  }

  auto [norm, flat] = normalize_g1(snap.g1);
  snap.g1_norm = std::move(norm);
  snap.flat = flat;
  snap.best_index = argmax_first(snap.g1);
  snap.best_pair = grid[snap.best_index];
  return snap;
}

}  // namespace apland
