#include "apland/engine.hpp"

#include <algorithm>

namespace apland {

SearchResult run_search(const BenchmarkFunction& f, ParameterAdaptation& pam,
                        const SearchSettings& settings, std::uint64_t master_seed,
                        std::uint64_t run_index, IterationObserver* observer) {
  const std::size_t n = settings.population;
  if (settings.budget < n) throw ConfigError("budget must be at least the population size");

  Rng init_rng(derive_seed(master_seed, run_index, Stream::kInit));
  Rng factor_rng(derive_seed(master_seed, run_index, Stream::kFactors));
  Rng pam_rng(derive_seed(master_seed, run_index, Stream::kPam));
  Rng archive_rng(derive_seed(master_seed, run_index, Stream::kArchive));

  SearchResult result;
  auto& counter = result.counter;
  Population pop = initialize_population(n, f, counter, init_rng);
  Archive archive(settings.archive_capacity == 0 ? n : settings.archive_capacity);

  double best_error = error_value(pop[0].fx, f);
  result.best_fx = pop[0].fx;
  result.fe_at_best = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = error_value(pop[i].fx, f);
    result.best_fx = std::min(result.best_fx, pop[i].fx);
    if (e < best_error) {
      best_error = e;
      result.fe_at_best = i + 1;
    }
  }
  result.trace.push_back({0, counter.counted, best_error});

  std::vector<ParameterPair> pairs(n);
  std::vector<FrozenFactors> factors(n);
  std::vector<std::optional<Trial>> trials(n);

  while (counter.counted < settings.budget && !(settings.stop_at_target && best_error == 0.0)) {
    const std::uint64_t fe_at_start = counter.counted;
    const std::uint64_t remaining = settings.budget - fe_at_start;
    const auto order = sort_by_fitness(pop);

    for (std::size_t i = 0; i < n; ++i) {
      pairs[i] = pam.sample(i, pam_rng);
      factors[i] = draw_frozen_factors(pop, i, settings.strategy, archive, order, factor_rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
      trials[i].reset();
      if (i >= remaining) continue;
      trials[i] = generate_trial(pop, i, pairs[i], factors[i], settings.strategy, f, counter,
                                 true, settings.repair);
      const double e = error_value(trials[i]->fu, f);
      result.best_fx = std::min(result.best_fx, trials[i]->fu);
      if (e < best_error) {
        best_error = e;
        result.fe_at_best = counter.counted;
      }
    }

    if (observer != nullptr) {
      const IterationView view{pop.iteration, fe_at_start, f,      settings, pop,
                               archive,       order,       pairs,  factors,  trials,
                               counter};
      observer->on_trials(view);
    }

    const SuccessRecords records = select_and_update(pop, archive, trials, pairs, archive_rng);
    pam.update(records);
    result.trace.push_back({pop.iteration - 1, counter.counted, best_error});
  }

  result.final_error = best_error;
  result.iterations = pop.iteration - 1;
  result.population = std::move(pop);
  return result;
}

}  // namespace apland
