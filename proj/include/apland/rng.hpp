#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace apland {

// Independent purposes that each get their own stream, so that consuming
// randomness for one purpose never shifts the draws of another.
enum class Stream : std::uint64_t {
  kInit = 1,
  kFactors = 2,
  kPam = 3,
  kArchive = 4,
  kFunction = 5,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for (master, run, stream). Pure function of its inputs.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run,
                                    Stream stream) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ splitmix64(run + 0x632be59bd9b4e019ULL));
  return splitmix64(h ^ static_cast<std::uint64_t>(stream));
}

class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform in [0, 1), 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [a, b].
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace apland
