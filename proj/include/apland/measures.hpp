#pragma once

#include "apland/profiler.hpp"
#include "apland/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace apland {

// Fraction of cells with strictly positive G1.
template <typename Derived>
double nzr(const Eigen::DenseBase<Derived>& g1) {
  const auto m = g1.size();
  return static_cast<double>((g1.derived().array() > 0).count()) / static_cast<double>(m);
}

// Two-pass Pearson correlation; nullopt when either side has zero spread.
template <typename DerivedX, typename DerivedY>
std::optional<double> pearson(const Eigen::DenseBase<DerivedX>& x,
                              const Eigen::DenseBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() < 2 || x.minCoeff() == x.maxCoeff() || y.minCoeff() == y.maxCoeff()) {
    return std::nullopt;
  }
  const auto dx = (x.derived().array() - x.derived().mean()).eval();
  const auto dy = (y.derived().array() - y.derived().mean()).eval();
  const Scalar sxx = dx.square().sum();
  const Scalar syy = dy.square().sum();
  if (!(sxx > 0) || !(syy > 0)) return std::nullopt;
  const Scalar r = (dx * dy).sum() / std::sqrt(sxx * syy);
  return std::clamp(static_cast<double>(r), -1.0, 1.0);
}

// Euclidean distance of every pair to the pair in row `anchor`.
template <typename Derived>
VectorX<typename Derived::Scalar> distances_to(const Eigen::MatrixBase<Derived>& pairs,
                                               Eigen::Index anchor) {
  return (pairs.rowwise() - pairs.row(anchor)).rowwise().norm();
}

// Correlation between distance to the G1-best pair and negated G1, so that
// a single funnel around the best pair scores towards +1.
template <typename DerivedP, typename DerivedG>
std::optional<double> fdc(const Eigen::MatrixBase<DerivedP>& pairs,
                          const Eigen::MatrixBase<DerivedG>& g1) {
  if (g1.size() < 2) return std::nullopt;
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < g1.size(); ++k) {
    if (g1[k] > g1[best]) best = k;
  }
  const auto dist = distances_to(pairs, best);
  return pearson(dist, (-g1.derived()).eval());
}

// Indices of the top b cells by G1, ties broken by lower index.
template <typename Derived>
std::vector<Eigen::Index> top_cells(const Eigen::MatrixBase<Derived>& g1, Eigen::Index b) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(g1.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index c) { return g1[a] > g1[c]; });
  order.resize(static_cast<std::size_t>(b));
  return order;
}

// Mean pairwise distance among the top floor(fraction * m) cells.
template <typename DerivedP, typename DerivedG>
std::optional<double> disp(const Eigen::MatrixBase<DerivedP>& pairs,
                           const Eigen::MatrixBase<DerivedG>& g1, double fraction = 0.1) {
  const auto b = static_cast<Eigen::Index>(std::floor(fraction * static_cast<double>(g1.size())));
  if (b < 2) return std::nullopt;
  const auto top = top_cells(g1, b);
  double total = 0.0;
  for (std::size_t a = 0; a < top.size(); ++a) {
    for (std::size_t c = a + 1; c < top.size(); ++c) {
      total += (pairs.row(top[a]) - pairs.row(top[c])).norm();
    }
  }
  const double count = static_cast<double>(b) * static_cast<double>(b - 1) / 2.0;
  return total / count;
}

struct MeasureRecord {
  LandscapeMetadata meta;
  double nzr = 0.0;
  std::optional<double> fdc;
  std::optional<double> disp;
  // Why fdc / disp are missing; empty when defined.
  std::string fdc_reason;
  std::string disp_reason;
  bool flat = false;
};

inline constexpr double kDispFraction = 0.1;

// Measures on raw G1. FDC and DISP are both unaffected by the min-max
// normalization, so either input gives the same record.
MeasureRecord measure_snapshot(const LandscapeSnapshot& snapshot,
                               double disp_fraction = kDispFraction);

}  // namespace apland
