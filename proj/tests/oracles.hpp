#pragma once

// Independent re-derivations used only by tests. Nothing here calls into the
// library's DE, profiler or measure code paths; inputs are plain std::vector.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

inline double sphere(const Vec& x, const Vec& shift) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += (x[j] - shift[j]) * (x[j] - shift[j]);
  return s;
}

// rand/1 or current-to-pbest/1 mutant, binomial crossover, midpoint repair.
struct TrialInputs {
  std::vector<Vec> population;
  std::size_t i = 0;
  bool rand1 = false;
  std::vector<std::size_t> parents;  // r1 r2 r3 (rand/1) or r1
  std::size_t pbest = 0;
  Vec archive_pick;
  Vec s;
  std::size_t j_rand = 0;
  double lower = -5.0, upper = 5.0;
};

inline Vec trial(const TrialInputs& in, double F, double C) {
  const Vec& x = in.population[in.i];
  const std::size_t d = x.size();
  Vec u(d);
  for (std::size_t j = 0; j < d; ++j) {
    double v;
    if (in.rand1) {
      const auto& p = in.parents;
      v = in.population[p[0]][j] + F * (in.population[p[1]][j] - in.population[p[2]][j]);
    } else {
      v = x[j] + F * (in.population[in.pbest][j] - x[j]) +
          F * (in.population[in.parents[0]][j] - in.archive_pick[j]);
    }
    u[j] = (in.s[j] <= C || j == in.j_rand) ? v : x[j];
    if (u[j] < in.lower) u[j] = (x[j] + in.lower) / 2.0;
    if (u[j] > in.upper) u[j] = (x[j] + in.upper) / 2.0;
  }
  return u;
}

inline double g1(double fx, double fu) { return fu < fx ? std::fabs(fx - fu) : 0.0; }

// Textbook single-pass Pearson r.
inline double pearson(const Vec& x, const Vec& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    syy += y[k] * y[k];
    sxy += x[k] * y[k];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

// Mean pairwise distance of the top floor(fraction*m) cells by height,
// selected by repeated linear scans.
inline double dispersion(const std::vector<double>& F, const std::vector<double>& C,
                         const Vec& height, double fraction) {
  const std::size_t m = height.size();
  const auto b = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(m)));
  std::vector<bool> used(m, false);
  std::vector<std::size_t> top;
  for (std::size_t pick = 0; pick < b; ++pick) {
    std::size_t best = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k]) continue;
      if (best == m || height[k] > height[best]) best = k;
    }
    used[best] = true;
    top.push_back(best);
  }
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < b; ++a) {
    for (std::size_t c = 0; c < b; ++c) {
      if (a >= c) continue;
      total += std::hypot(F[top[a]] - F[top[c]], C[top[a]] - C[top[c]]);
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

}  // namespace oracle
