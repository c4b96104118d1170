#include "apland/de.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace apland {

void Archive::insert(Individual ind, Rng& rng) {
  members_.push_back(std::move(ind));
  while (members_.size() > capacity_) {
    const std::size_t victim = rng.index(members_.size());
    members_[victim] = std::move(members_.back());
    members_.pop_back();
  }
}

std::size_t MutationStrategy::pbest_pool(std::size_t n) const {
  const auto top = static_cast<std::size_t>(std::floor(static_cast<double>(n) * p));
  return std::min(std::max<std::size_t>(top, 2), n);
}

Population initialize_population(std::size_t n, const BenchmarkFunction& f,
                                 EvaluationCounter& counter, Rng& rng) {
  if (n < 4) throw ConfigError("population size must be at least 4");
  Population pop;
  pop.members.reserve(n);
  const auto d = f.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    Individual ind;
    ind.x.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) ind.x[j] = rng.uniform(f.lower(), f.upper());
    ind.fx = evaluate(f, ind.x, counter, true);
    pop.members.push_back(std::move(ind));
  }
  pop.iteration = 1;
  return pop;
}

std::vector<std::size_t> sort_by_fitness(const Population& pop) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pop[a].fx < pop[b].fx; });
  return order;
}

FrozenFactors draw_frozen_factors(const Population& pop, std::size_t i,
                                  const MutationStrategy& strategy, const Archive& archive,
                                  Rng& rng) {
  const auto order = sort_by_fitness(pop);
  return draw_frozen_factors(pop, i, strategy, archive, order, rng);
}

namespace {

std::size_t draw_excluding(Rng& rng, std::size_t n, std::span<const std::size_t> taken) {
  for (;;) {
    const std::size_t r = rng.index(n);
    if (std::find(taken.begin(), taken.end(), r) == taken.end()) return r;
  }
}

}  // namespace

FrozenFactors draw_frozen_factors(const Population& pop, std::size_t i,
                                  const MutationStrategy& strategy, const Archive& archive,
                                  std::span<const std::size_t> order, Rng& rng) {
  const std::size_t n = pop.size();
  FrozenFactors ff;
  if (strategy.kind == MutationStrategy::Kind::kRand1) {
    std::vector<std::size_t> taken{i};
    for (int k = 0; k < 3; ++k) {
      const std::size_t r = draw_excluding(rng, n, taken);
      ff.parents.push_back(r);
      taken.push_back(r);
    }
  } else {
    ff.pbest_index = order[rng.index(strategy.pbest_pool(n))];
    const std::size_t taken_i[] = {i};
    const std::size_t r1 = draw_excluding(rng, n, taken_i);
    ff.parents.push_back(r1);
    const std::size_t taken_both[] = {i, r1};
    const std::size_t r2 = draw_excluding(rng, n + archive.size(), taken_both);
    ff.union_index = r2;
    ff.archive_pick = r2 < n ? pop[r2].x : archive[r2 - n].x;
  }
  const auto d = pop[i].x.size();
  ff.s.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) ff.s[j] = rng.uniform();
  ff.j_rand = rng.index(static_cast<std::size_t>(d));
  return ff;
}

Vector mutate(const Population& pop, std::size_t i, const ParameterPair& theta,
              const FrozenFactors& ff, const MutationStrategy& strategy) {
  const double F = theta.F;
  if (strategy.kind == MutationStrategy::Kind::kRand1) {
    const auto& p = ff.parents;
    return pop[p[0]].x + F * (pop[p[1]].x - pop[p[2]].x);
  }
  const Vector& xi = pop[i].x;
  return xi + F * (pop[*ff.pbest_index].x - xi) + F * (pop[ff.parents[0]].x - ff.archive_pick);
}

Vector crossover_binomial(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& v,
                          double C, const FrozenFactors& ff) {
  Vector u = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (ff.s[j] <= C || static_cast<std::size_t>(j) == ff.j_rand) u[j] = v[j];
  }
  return u;
}

void repair_bounds(Vector& u, const Eigen::Ref<const Vector>& parent, double lower, double upper,
                   BoundaryRepair repair) {
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    if (u[j] < lower) {
      u[j] = repair == BoundaryRepair::kMidpoint ? 0.5 * (parent[j] + lower) : lower;
    } else if (u[j] > upper) {
      u[j] = repair == BoundaryRepair::kMidpoint ? 0.5 * (parent[j] + upper) : upper;
    }
  }
}

Trial generate_trial(const Population& pop, std::size_t i, const ParameterPair& theta,
                     const FrozenFactors& ff, const MutationStrategy& strategy,
                     const BenchmarkFunction& f, EvaluationCounter& counter, bool counted,
                     BoundaryRepair repair) {
  const Vector v = mutate(pop, i, theta, ff, strategy);
  Trial trial;
  trial.u = crossover_binomial(pop[i].x, v, theta.C, ff);
  repair_bounds(trial.u, pop[i].x, f.lower(), f.upper(), repair);
  trial.fu = evaluate(f, trial.u, counter, counted);
  return trial;
}

SuccessRecords select_and_update(Population& pop, Archive& archive,
                                 std::span<const std::optional<Trial>> trials,
                                 std::span<const ParameterPair> pairs, Rng& archive_rng) {
  const std::size_t n = pop.size();
  if (trials.size() != n || pairs.size() != n) {
    throw DomainError("selection needs exactly one trial slot and pair per individual");
  }
  SuccessRecords records;
  records.success.assign(n, false);
  records.pairs.assign(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& trial = trials[i];
    if (!trial || trial->fu > pop[i].fx) continue;
    archive.insert(std::move(pop[i]), archive_rng);
    pop[i] = Individual{trial->u, trial->fu};
    records.success[i] = true;
  }
  ++pop.iteration;
  return records;
}

}  // namespace apland
