#include "apland/pam.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace apland {

double randu(double a, double b, Rng& rng) { return rng.uniform(a, b); }

double sample_normal_clipped(double mu, double sigma, Rng& rng) {
  const double draw = mu + sigma * rng.normal();
  return std::clamp(draw, 0.0, 1.0);
}

double cauchy_variate(double mu, double gamma, Rng& rng) {
  return mu + gamma * std::tan(std::numbers::pi * (rng.uniform() - 0.5));
}

double sample_cauchy_clamped(double mu, double gamma, Rng& rng) {
  for (int attempt = 0; attempt < kMaxCauchyRedraws; ++attempt) {
    const double draw = cauchy_variate(mu, gamma, rng);
    if (draw > 0.0) return std::min(draw, 1.0);
  }
  return kCauchyFallback;
}

SuccessSets SuccessSets::from(const SuccessRecords& records) {
  SuccessSets sets;
  for (std::size_t i = 0; i < records.success.size(); ++i) {
    if (!records.success[i]) continue;
    sets.F.push_back(records.pairs[i].F);
    sets.C.push_back(records.pairs[i].C);
  }
  return sets;
}

std::string FixedPam::name() const {
  char buf[64];
  auto* end = std::to_chars(buf, buf + sizeof buf, pair_.F).ptr;
  std::string out = "fixed:" + std::string(buf, end) + ":";
  end = std::to_chars(buf, buf + sizeof buf, pair_.C).ptr;
  return out + std::string(buf, end);
}

Pjde::Pjde(std::size_t n, PjdeSettings settings)
    : settings_(settings),
      stored_F_(n, 0.5),
      stored_C_(n, 0.9),
      trial_F_(n, 0.5),
      trial_C_(n, 0.9) {}

ParameterPair Pjde::sample(std::size_t i, Rng& rng) {
  trial_F_[i] = rng.uniform() < settings_.tau_F ? randu(0.1, 1.0, rng) : stored_F_[i];
  trial_C_[i] = rng.uniform() < settings_.tau_C ? randu(0.0, 1.0, rng) : stored_C_[i];
  sampled_ = true;
  return {trial_F_[i], trial_C_[i]};
}

void Pjde::update(const SuccessRecords& records) {
  if (!sampled_) throw StateError("pjde update called before sample");
  for (std::size_t i = 0; i < records.success.size(); ++i) {
    if (!records.success[i]) continue;
    stored_F_[i] = trial_F_[i];
    stored_C_[i] = trial_C_[i];
  }
  sampled_ = false;
}

ParameterPair Pjade::sample(std::size_t, Rng& rng) {
  const double F = sample_cauchy_clamped(mu_F_, 0.1, rng);
  const double C = sample_normal_clipped(mu_C_, 0.1, rng);
  return {F, C};
}

void Pjade::update(const SuccessSets& sets) {
  if (sets.empty()) return;
  const double c = settings_.c;
  mu_F_ = (1.0 - c) * mu_F_ + c * lehmer_mean(sets.F);
  mu_C_ = (1.0 - c) * mu_C_ + c * arithmetic_mean(sets.C);
}

Pshade::Pshade(PshadeSettings settings)
    : memory_F_(Vector::Constant(static_cast<Eigen::Index>(settings.H), 0.5)),
      memory_C_(Vector::Constant(static_cast<Eigen::Index>(settings.H), 0.5)) {
  if (settings.H < 1) throw ConfigError("pshade memory size must be at least 1");
}

ParameterPair Pshade::sample(std::size_t, Rng& rng) {
  last_r_ = rng.index(static_cast<std::size_t>(memory_F_.size()));
  const auto r = static_cast<Eigen::Index>(last_r_);
  const double F = sample_cauchy_clamped(memory_F_[r], 0.1, rng);
  const double C = sample_normal_clipped(memory_C_[r], 0.1, rng);
  return {F, C};
}

void Pshade::update(const SuccessSets& sets) {
  if (sets.empty()) return;
  const auto k = static_cast<Eigen::Index>(k_);
  memory_F_[k] = lehmer_mean(sets.F);
  // Lehmer for both memories in this variant.
  memory_C_[k] = lehmer_mean(sets.C);
  k_ = (k_ + 1) % static_cast<std::size_t>(memory_F_.size());
}

namespace {

double parse_unit(std::string_view text, const std::string& name) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("malformed fixed pair '" + name + "'");
  }
  return value;
}

}  // namespace

std::unique_ptr<ParameterAdaptation> make_pam(const std::string& name, std::size_t n,
                                              const PamSettings& settings) {
  if (name == "pjde") return std::make_unique<Pjde>(n, settings.jde);
  if (name == "pjade") return std::make_unique<Pjade>(settings.jade);
  if (name == "pshade") return std::make_unique<Pshade>(settings.shade);
  if (name.starts_with("fixed:")) {
    const std::string_view rest = std::string_view(name).substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ConfigError("fixed pair needs F and C: '" + name + "'");
    const ParameterPair pair{parse_unit(rest.substr(0, colon), name),
                             parse_unit(rest.substr(colon + 1), name)};
    if (!(pair.F > 0.0) || pair.C < 0.0 || pair.C > 1.0) {
      throw ConfigError("fixed pair out of range: '" + name + "'");
    }
    return std::make_unique<FixedPam>(pair);
  }
  throw ConfigError("unknown parameter adaptation '" + name + "'");
}

}  // namespace apland
