#pragma once

#include "apland/types.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace apland {

enum class Category {
  kSeparable,
  kLowModerateConditioning,
  kHighConditioningUnimodal,
  kMultimodalAdequateStructure,
  kMultimodalWeakStructure,
};

std::string_view to_string(Category c);

enum class BaseForm { kSphere, kEllipsoid, kRastrigin, kRosenbrock, kKatsuura };

// Search-budget and profiler evaluations are tallied separately; only the
// former count against the run budget. Owned by the single coordinating
// thread of a run.
struct EvaluationCounter {
  std::uint64_t counted = 0;
  std::uint64_t uncounted = 0;
};

struct CatalogEntry {
  std::string_view name;
  BaseForm form;
  Category category;
  bool rotated;
};

const std::vector<CatalogEntry>& function_catalog();

// f(x) = optimum_value + base(R (x - shift)), optimum at x = shift.
// Immutable after construction.
class BenchmarkFunction {
 public:
  BenchmarkFunction(std::string name, BaseForm form, Category category,
                    Vector shift, Matrix rotation, std::uint64_t seed = 0);

  double operator()(const Eigen::Ref<const Vector>& x) const;

  const std::string& name() const { return name_; }
  Eigen::Index dimension() const { return shift_.size(); }
  double lower() const { return -5.0; }
  double upper() const { return 5.0; }
  Category category() const { return category_; }
  BaseForm form() const { return form_; }
  const Vector& optimum_location() const { return shift_; }
  double optimum_value() const { return 0.0; }
  const Vector& shift() const { return shift_; }
  const Matrix& rotation() const { return rotation_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::string name_;
  BaseForm form_;
  Category category_;
  Vector shift_;
  Matrix rotation_;
  std::uint64_t seed_;
};

// Seeded instance from the catalog: shift uniform in [-4, 4]^d, rotation a
// seeded random orthogonal matrix for rotated entries (identity otherwise).
BenchmarkFunction make_function(std::string_view name, Eigen::Index d,
                                std::uint64_t seed);

// Haar-distributed orthogonal matrix from QR of a standard-normal draw.
Matrix random_rotation(Eigen::Index d, std::uint64_t seed);

double evaluate(const BenchmarkFunction& f, const Eigen::Ref<const Vector>& x,
                EvaluationCounter& counter, bool counted);

// Gap to the optimum, with anything below 1e-8 reported as exactly 0.
double error_value(double best_so_far, const BenchmarkFunction& f);

namespace base {
double sphere(const Eigen::Ref<const Vector>& z);
double ellipsoid(const Eigen::Ref<const Vector>& z);
double rastrigin(const Eigen::Ref<const Vector>& z);
// Minimum at z = 0 (the usual form shifted by one).
double rosenbrock(const Eigen::Ref<const Vector>& z);
double katsuura(const Eigen::Ref<const Vector>& z);
}  // namespace base

}  // namespace apland
