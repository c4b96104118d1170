#pragma once

#include "apland/de.hpp"
#include "apland/rng.hpp"
#include "apland/types.hpp"

#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace apland {

double randu(double a, double b, Rng& rng);

// One N(mu, sigma^2) draw clipped into [0, 1].
double sample_normal_clipped(double mu, double sigma, Rng& rng);

// Cauchy(mu, gamma) by inverse CDF: mu + gamma * tan(pi * (U - 1/2)).
// Values above 1 are truncated to 1; non-positive values are redrawn, at
// most kMaxCauchyRedraws times, after which kCauchyFallback is returned.
double sample_cauchy_clamped(double mu, double gamma, Rng& rng);
inline constexpr int kMaxCauchyRedraws = 100;
inline constexpr double kCauchyFallback = 1e-3;

// The raw (unclamped) variate that sample_cauchy_clamped transforms.
double cauchy_variate(double mu, double gamma, Rng& rng);

// sum(s^2) / sum(s). Caller guarantees a nonempty, positive sample.
template <typename Derived>
typename Derived::Scalar lehmer_mean(const Eigen::DenseBase<Derived>& s) {
  return s.derived().array().square().sum() / s.derived().array().sum();
}

inline double lehmer_mean(std::span<const double> s) {
  return lehmer_mean(Eigen::Map<const Vector>(s.data(), static_cast<Eigen::Index>(s.size())));
}

inline double arithmetic_mean(std::span<const double> s) {
  return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
}

struct SuccessSets {
  std::vector<double> F;
  std::vector<double> C;

  bool empty() const { return F.empty(); }
  static SuccessSets from(const SuccessRecords& records);
};

// Samples a parameter pair per individual before trial generation and
// learns from the selection outcome afterwards.
class ParameterAdaptation {
 public:
  virtual ~ParameterAdaptation() = default;

  virtual std::string name() const = 0;
  virtual ParameterPair sample(std::size_t i, Rng& rng) = 0;
  virtual void update(const SuccessRecords& records) = 0;
  virtual std::unique_ptr<ParameterAdaptation> clone() const = 0;
};

class FixedPam final : public ParameterAdaptation {
 public:
  explicit FixedPam(ParameterPair pair) : pair_(pair) {}
  std::string name() const override;
  ParameterPair sample(std::size_t, Rng&) override { return pair_; }
  void update(const SuccessRecords&) override {}
  std::unique_ptr<ParameterAdaptation> clone() const override {
    return std::make_unique<FixedPam>(*this);
  }

 private:
  ParameterPair pair_;
};

struct PjdeSettings {
  double tau_F = 0.1;
  double tau_C = 0.1;
};

class Pjde final : public ParameterAdaptation {
 public:
  Pjde(std::size_t n, PjdeSettings settings = {});

  std::string name() const override { return "pjde"; }
  ParameterPair sample(std::size_t i, Rng& rng) override;
  void update(const SuccessRecords& records) override;
  std::unique_ptr<ParameterAdaptation> clone() const override {
    return std::make_unique<Pjde>(*this);
  }

  const std::vector<double>& stored_F() const { return stored_F_; }
  const std::vector<double>& stored_C() const { return stored_C_; }
  const std::vector<double>& trial_F() const { return trial_F_; }
  const std::vector<double>& trial_C() const { return trial_C_; }

 private:
  PjdeSettings settings_;
  std::vector<double> stored_F_, stored_C_;
  std::vector<double> trial_F_, trial_C_;
  bool sampled_ = false;
};

struct PjadeSettings {
  double c = 0.1;
};

class Pjade final : public ParameterAdaptation {
 public:
  explicit Pjade(PjadeSettings settings = {}) : settings_(settings) {}

  std::string name() const override { return "pjade"; }
  ParameterPair sample(std::size_t i, Rng& rng) override;
  void update(const SuccessRecords& records) override { update(SuccessSets::from(records)); }
  void update(const SuccessSets& sets);
  std::unique_ptr<ParameterAdaptation> clone() const override {
    return std::make_unique<Pjade>(*this);
  }

  double mu_F() const { return mu_F_; }
  double mu_C() const { return mu_C_; }
  void set_means(double mu_F, double mu_C) { mu_F_ = mu_F, mu_C_ = mu_C; }

 private:
  PjadeSettings settings_;
  double mu_F_ = 0.5;
  double mu_C_ = 0.5;
};

struct PshadeSettings {
  std::size_t H = 10;
};

class Pshade final : public ParameterAdaptation {
 public:
  explicit Pshade(PshadeSettings settings = {});

  std::string name() const override { return "pshade"; }
  ParameterPair sample(std::size_t i, Rng& rng) override;
  void update(const SuccessRecords& records) override { update(SuccessSets::from(records)); }
  void update(const SuccessSets& sets);
  std::unique_ptr<ParameterAdaptation> clone() const override {
    return std::make_unique<Pshade>(*this);
  }

  const Vector& memory_F() const { return memory_F_; }
  const Vector& memory_C() const { return memory_C_; }
  // 0-based slot that the next nonempty update overwrites.
  std::size_t next_slot() const { return k_; }
  // 0-based memory slot used by the most recent sample().
  std::size_t last_slot() const { return last_r_; }
  void set_next_slot(std::size_t k) { k_ = k % memory_F_.size(); }

 private:
  Vector memory_F_, memory_C_;
  std::size_t k_ = 0;
  std::size_t last_r_ = 0;
};

struct PamSettings {
  PjdeSettings jde;
  PjadeSettings jade;
  PshadeSettings shade;
};

// Accepts pjde, pjade, pshade, and fixed:<F>:<C>.
std::unique_ptr<ParameterAdaptation> make_pam(const std::string& name, std::size_t n,
                                              const PamSettings& settings = {});

}  // namespace apland
