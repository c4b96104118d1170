#include "apland/pam.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace apland;

namespace {

SuccessRecords records(std::vector<bool> flags, std::vector<ParameterPair> pairs) {
  return {std::move(flags), std::move(pairs)};
}

}  // namespace

TEST_CASE("randu") {
  Rng rng(1);
  CHECK(randu(0.0, 0.0, rng) == 0.0);
  Rng a(5), b(5);
  CHECK(randu(0.1, 1.0, a) == randu(0.1, 1.0, b));
  for (int k = 0; k < 100000; ++k) {
    const double v = randu(0.1, 1.0, rng);
    REQUIRE(v >= 0.1);
    REQUIRE(v <= 1.0);
  }
}

TEST_CASE("normal sampling clips into [0, 1]") {
  // Replay the same stream: clipped value is the raw draw pushed into range.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng raw(seed), clipped(seed);
    const double draw = 0.5 + 0.5 * raw.normal();
    const double got = sample_normal_clipped(0.5, 0.5, clipped);
    if (draw > 1.0) CHECK(got == 1.0);
    else if (draw < 0.0) CHECK(got == 0.0);
    else CHECK(got == draw);
  }
}

TEST_CASE("cauchy sampling truncates above 1 and redraws non-positive values") {
  SUBCASE("redraw path, frozen from a replay of seed 12") {
    Rng replay(12);
    const double first = 0.05 + 0.1 * std::tan(std::numbers::pi * (replay.uniform() - 0.5));
    const double second = 0.05 + 0.1 * std::tan(std::numbers::pi * (replay.uniform() - 0.5));
    CHECK(first == doctest::Approx(-0.099944730863455247).epsilon(1e-14));
    CHECK(second == doctest::Approx(0.068870851604686395).epsilon(1e-14));
    Rng rng(12);
    CHECK(sample_cauchy_clamped(0.05, 0.1, rng) == second);
    CHECK(rng == replay);
  }
  SUBCASE("large draws truncate to 1") {
    int truncated = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      Rng raw(seed), rng(seed);
      const double draw = cauchy_variate(0.9, 0.1, raw);
      const double got = sample_cauchy_clamped(0.9, 0.1, rng);
      if (draw > 1.0) {
        CHECK(got == 1.0);
        ++truncated;
      } else if (draw > 0.0) {
        CHECK(got == draw);
      }
    }
    CHECK(truncated > 0);
  }
  SUBCASE("hopeless location falls back after bounded redraws") {
    Rng rng(3);
    CHECK(sample_cauchy_clamped(-1e9, 0.1, rng) == kCauchyFallback);
  }
}

TEST_CASE("lehmer mean") {
  const std::vector<double> one{0.5}, two{0.2, 0.4}, ones{1, 1, 1};
  CHECK(lehmer_mean(one) == 0.5);
  CHECK(lehmer_mean(two) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(lehmer_mean(ones) == 1.0);

  Rng rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<double> s(1 + rng.index(20));
    for (auto& v : s) v = rng.uniform(1e-3, 1.0);
    CHECK(lehmer_mean(s) >= arithmetic_mean(s) - 1e-15);
  }
}

TEST_CASE("pjde sampling and update") {
  SUBCASE("initial values are inherited without resampling") {
    Pjde pam(4, {0.0, 0.0});
    Rng rng(1);
    for (std::size_t i = 0; i < 4; ++i) CHECK(pam.sample(i, rng) == ParameterPair{0.5, 0.9});
  }
  SUBCASE("forced resampling draws F from [0.1, 1]") {
    Pjde pam(4, {1.0, 1.0});
    Rng rng(2);
    for (int rep = 0; rep < 1000; ++rep) {
      const auto p = pam.sample(rep % 4, rng);
      CHECK(p.F >= 0.1);
      CHECK(p.F <= 1.0);
      CHECK(p.C >= 0.0);
      CHECK(p.C <= 1.0);
    }
  }
  SUBCASE("success adopts the trial pair, failure keeps the stored one") {
    Pjde pam(3, {1.0, 1.0});
    Rng rng(3);
    std::vector<ParameterPair> pairs;
    for (std::size_t i = 0; i < 3; ++i) pairs.push_back(pam.sample(i, rng));
    pam.update(records({true, false, true}, pairs));
    CHECK(pam.stored_F()[0] == pairs[0].F);
    CHECK(pam.stored_C()[0] == pairs[0].C);
    CHECK(pam.stored_F()[1] == 0.5);
    CHECK(pam.stored_C()[1] == 0.9);
    CHECK(pam.stored_F()[2] == pairs[2].F);
  }
  SUBCASE("update before sample is a state error") {
    Pjde pam(2);
    CHECK_THROWS_AS(pam.update(records({true, true}, {{0.5, 0.5}, {0.5, 0.5}})), StateError);
  }
  SUBCASE("stored values change only on success under random masks") {
    Pjde pam(10);
    Rng rng(4);
    for (int it = 0; it < 200; ++it) {
      const auto before_F = pam.stored_F();
      const auto before_C = pam.stored_C();
      std::vector<ParameterPair> pairs;
      std::vector<bool> mask;
      for (std::size_t i = 0; i < 10; ++i) {
        pairs.push_back(pam.sample(i, rng));
        mask.push_back(rng.uniform() < 0.3);
      }
      pam.update(records(mask, pairs));
      for (std::size_t i = 0; i < 10; ++i) {
        if (mask[i]) {
          CHECK(pam.stored_F()[i] == pairs[i].F);
          CHECK(pam.stored_C()[i] == pairs[i].C);
        } else {
          CHECK(pam.stored_F()[i] == before_F[i]);
          CHECK(pam.stored_C()[i] == before_C[i]);
        }
        CHECK(pam.stored_F()[i] >= 0.1);
        CHECK(pam.stored_F()[i] <= 1.0);
      }
    }
  }
}

TEST_CASE("pjade update arithmetic") {
  Pjade pam;
  CHECK(pam.mu_F() == 0.5);
  CHECK(pam.mu_C() == 0.5);
  SUBCASE("F blends with the Lehmer mean") {
    pam.update(SuccessSets{{0.8}, {0.5}});
    CHECK(std::abs(pam.mu_F() - 0.53) <= 1e-15);
  }
  SUBCASE("C blends with the arithmetic mean") {
    pam.update(SuccessSets{{0.5, 0.5}, {0.2, 0.4}});
    CHECK(pam.mu_C() == doctest::Approx(0.48).epsilon(1e-15));
  }
  SUBCASE("empty success sets leave the means alone") {
    pam.set_means(0.3, 0.7);
    pam.update(SuccessSets{});
    CHECK(pam.mu_F() == 0.3);
    CHECK(pam.mu_C() == 0.7);
  }
}

TEST_CASE("pshade memory update and index wrap") {
  SUBCASE("H = 2 wraps k back to the first slot") {
    Pshade pam({2});
    pam.set_next_slot(1);
    pam.update(SuccessSets{{0.6}, {0.2, 0.4}});
    CHECK(pam.next_slot() == 0);
  }
  SUBCASE("memories take Lehmer means of both sets") {
    Pshade pam;
    pam.update(SuccessSets{{0.2, 0.4}, {0.2, 0.4}});
    CHECK(pam.memory_F()[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pam.memory_C()[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pam.next_slot() == 1);
  }
  SUBCASE("empty sets change nothing") {
    Pshade pam;
    pam.update(SuccessSets{});
    CHECK(pam.memory_F() == Vector::Constant(10, 0.5));
    CHECK(pam.next_slot() == 0);
  }
  SUBCASE("index cycles with period H over nonempty updates") {
    Pshade pam({4});
    for (int u = 1; u <= 12; ++u) {
      pam.update(SuccessSets{{0.5}, {0.5}});
      CHECK(pam.next_slot() == static_cast<std::size_t>(u % 4));
    }
  }
  SUBCASE("H = 1 always samples slot 0") {
    Pshade pam({1});
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
      pam.sample(0, rng);
      CHECK(pam.last_slot() == 0);
    }
  }
  SUBCASE("fresh memories sample like P-JADE at t = 1") {
    Pshade shade;
    Pjade jade;
    Rng a(6), b(6);
    for (int k = 0; k < 100; ++k) {
      const auto ps = shade.sample(0, a);
      b.index(10);  // consume the slot draw
      CHECK(ps == jade.sample(0, b));
    }
  }
}

TEST_CASE("all PAMs emit F in (0, 1] and C in [0, 1]") {
  Rng rng(123);
  for (const std::string name : {"pjde", "pjade", "pshade"}) {
    auto pam = make_pam(name, 10);
    std::vector<ParameterPair> pairs(10);
    for (int it = 0; it < 100000; ++it) {
      const std::size_t i = static_cast<std::size_t>(it % 10);
      pairs[i] = pam->sample(i, rng);
      REQUIRE(pairs[i].F > 0.0);
      REQUIRE(pairs[i].F <= 1.0);
      REQUIRE(pairs[i].C >= 0.0);
      REQUIRE(pairs[i].C <= 1.0);
      if (i == 9) {
        std::vector<bool> mask(10);
        for (auto&& m : mask) m = rng.uniform() < 0.2;
        pam->update({mask, pairs});
      }
    }
  }
}

TEST_CASE("make_pam parses names and fixed pairs") {
  CHECK(make_pam("pjde", 5)->name() == "pjde");
  CHECK(make_pam("pshade", 5)->name() == "pshade");
  auto fixed = make_pam("fixed:0.5:0.9", 5);
  Rng rng(1);
  CHECK(fixed->sample(0, rng) == ParameterPair{0.5, 0.9});
  CHECK(fixed->name() == "fixed:0.5:0.9");
  CHECK_THROWS_AS(make_pam("sade", 5), ConfigError);
  CHECK_THROWS_AS(make_pam("fixed:0.5", 5), ConfigError);
  CHECK_THROWS_AS(make_pam("fixed:0:0.5", 5), ConfigError);
  CHECK_THROWS_AS(make_pam("fixed:0.5:1.5", 5), ConfigError);
}
