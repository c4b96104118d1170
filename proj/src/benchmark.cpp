#include "apland/benchmark.hpp"

#include "apland/rng.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace apland {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kSeparable: return "separable";
    case Category::kLowModerateConditioning: return "low-moderate-conditioning";
    case Category::kHighConditioningUnimodal: return "high-conditioning-unimodal";
    case Category::kMultimodalAdequateStructure: return "multimodal-adequate-structure";
    case Category::kMultimodalWeakStructure: return "multimodal-weak-structure";
  }
  return "unknown";
}

const std::vector<CatalogEntry>& function_catalog() {
  static const std::vector<CatalogEntry> catalog{
      {"sphere", BaseForm::kSphere, Category::kSeparable, false},
      {"rastrigin", BaseForm::kRastrigin, Category::kSeparable, false},
      {"rosenbrock-rotated", BaseForm::kRosenbrock, Category::kLowModerateConditioning, true},
      {"ellipsoid", BaseForm::kEllipsoid, Category::kHighConditioningUnimodal, true},
      {"rastrigin-rotated", BaseForm::kRastrigin, Category::kMultimodalAdequateStructure, true},
      {"katsuura", BaseForm::kKatsuura, Category::kMultimodalWeakStructure, true},
  };
  return catalog;
}

namespace base {

double sphere(const Eigen::Ref<const Vector>& z) { return z.squaredNorm(); }

double ellipsoid(const Eigen::Ref<const Vector>& z) {
  const auto d = z.size();
  double sum = 0.0;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double exponent = d > 1 ? 6.0 * static_cast<double>(j) / static_cast<double>(d - 1) : 0.0;
    sum += std::pow(10.0, exponent) * z[j] * z[j];
  }
  return sum;
}

double rastrigin(const Eigen::Ref<const Vector>& z) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double sum = 10.0 * static_cast<double>(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    sum += z[j] * z[j] - 10.0 * std::cos(two_pi * z[j]);
  }
  return sum;
}

double rosenbrock(const Eigen::Ref<const Vector>& z) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j + 1 < z.size(); ++j) {
    const double a = z[j] + 1.0;
    const double b = z[j + 1] + 1.0;
    sum += 100.0 * (b - a * a) * (b - a * a) + (a - 1.0) * (a - 1.0);
  }
  return sum;
}

double katsuura(const Eigen::Ref<const Vector>& z) {
  const double d = static_cast<double>(z.size());
  const double power = 10.0 / std::pow(d, 1.2);
  double product = 1.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double inner = 0.0;
    double scale = 2.0;
    for (int j = 1; j <= 32; ++j, scale *= 2.0) {
      const double v = scale * z[i];
      inner += std::abs(v - std::round(v)) / scale;
    }
    product *= std::pow(1.0 + static_cast<double>(i + 1) * inner, power);
  }
  const double factor = 10.0 / (d * d);
  return factor * product - factor;
}

}  // namespace base

BenchmarkFunction::BenchmarkFunction(std::string name, BaseForm form, Category category,
                                     Vector shift, Matrix rotation, std::uint64_t seed)
    : name_(std::move(name)),
      form_(form),
      category_(category),
      shift_(std::move(shift)),
      rotation_(std::move(rotation)),
      seed_(seed) {
  if (shift_.size() < 2) throw DomainError("benchmark dimension must be at least 2");
  if (rotation_.rows() != shift_.size() || rotation_.cols() != shift_.size()) {
    throw DomainError("rotation must be a d x d matrix");
  }
}

double BenchmarkFunction::operator()(const Eigen::Ref<const Vector>& x) const {
  const Vector z = rotation_ * (x - shift_);
  double value = 0.0;
  switch (form_) {
    case BaseForm::kSphere: value = base::sphere(z); break;
    case BaseForm::kEllipsoid: value = base::ellipsoid(z); break;
    case BaseForm::kRastrigin: value = base::rastrigin(z); break;
    case BaseForm::kRosenbrock: value = base::rosenbrock(z); break;
    case BaseForm::kKatsuura: value = base::katsuura(z); break;
  }
  return optimum_value() + value;
}

Matrix random_rotation(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix gaussian(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) gaussian(r, c) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(gaussian);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix column signs so Q does not depend on the Householder sign convention.
  for (Eigen::Index j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

BenchmarkFunction make_function(std::string_view name, Eigen::Index d, std::uint64_t seed) {
  const auto& catalog = function_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
  if (it == catalog.end()) throw ConfigError("unknown function '" + std::string(name) + "'");
  if (d < 2) throw DomainError("benchmark dimension must be at least 2");

  Rng rng(derive_seed(seed, 0, Stream::kFunction));
  Vector shift(d);
  for (Eigen::Index j = 0; j < d; ++j) shift[j] = rng.uniform(-4.0, 4.0);
  Matrix rotation = it->rotated ? random_rotation(d, rng()) : Matrix::Identity(d, d);
  return BenchmarkFunction(std::string(name), it->form, it->category, std::move(shift),
                           std::move(rotation), seed);
}

double evaluate(const BenchmarkFunction& f, const Eigen::Ref<const Vector>& x,
                EvaluationCounter& counter, bool counted) {
  ++(counted ? counter.counted : counter.uncounted);
  return f(x);
}

double error_value(double best_so_far, const BenchmarkFunction& f) {
  const double gap = std::max(best_so_far - f.optimum_value(), 0.0);
  return gap < 1e-8 ? 0.0 : gap;
}

}  // namespace apland
