#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace apland {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
// One (F, C) pair per row.
template <typename Scalar>
using PairCloud = Eigen::Matrix<Scalar, Eigen::Dynamic, 2, Eigen::RowMajor>;

using Vector = VectorX<double>;
using Matrix = MatrixX<double>;
using Pairs = PairCloud<double>;

// Scale factor F and crossover rate C used to generate one trial vector.
struct ParameterPair {
  double F = 0.5;
  double C = 0.5;

  friend bool operator==(const ParameterPair&, const ParameterPair&) = default;
};

// Bad user-supplied configuration (unknown names, out-of-range settings).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operation called in the wrong lifecycle state.
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

// Command-line or API misuse (e.g. asking for the median of nothing).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace apland
