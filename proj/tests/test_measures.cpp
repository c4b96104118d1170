#include "apland/measures.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace apland;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) out[k++] = x;
  return out;
}

LandscapeSnapshot random_snapshot(Rng& rng, int k_F, int k_C, double zero_rate) {
  LandscapeSnapshot snap;
  snap.grid = build_grid(k_F, k_C);
  snap.g1.resize(snap.grid.size());
  for (Eigen::Index k = 0; k < snap.g1.size(); ++k) {
    snap.g1[k] = rng.uniform() < zero_rate ? 0.0 : rng.uniform() * std::pow(10.0, rng.uniform(-8, 8));
  }
  auto [norm, flat] = normalize_g1(snap.g1);
  snap.g1_norm = norm;
  snap.flat = flat;
  return snap;
}

}  // namespace

TEST_CASE("nzr") {
  CHECK(nzr(vec({0, 0, 0, 0})) == 0.0);
  CHECK(nzr(vec({0.1, 0, 2.0, 0.5})) == 0.75);
  CHECK(nzr(vec({1, 2, 3})) == 1.0);
}

TEST_CASE("fdc") {
  SUBCASE("g1 falling linearly with distance gives +1") {
    Pairs pairs(3, 2);
    pairs << 0, 0, 1, 0, 2, 0;
    CHECK(*fdc(pairs, vec({1.0, 0.5, 0.0})) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("flat landscape is undefined") {
    const auto grid = build_grid(4, 4);
    CHECK_FALSE(fdc(grid.pairs, Vector::Zero(16)).has_value());
    CHECK_FALSE(fdc(grid.pairs, Vector::Constant(16, 2.0)).has_value());
  }
  SUBCASE("matches a textbook Pearson on a random cloud") {
    Rng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
      Pairs pairs(100, 2);
      Vector g(100);
      for (int k = 0; k < 100; ++k) {
        pairs(k, 0) = rng.uniform();
        pairs(k, 1) = rng.uniform();
        g[k] = rng.uniform();
      }
      const Eigen::Index best = argmax_first(g);
      oracle::Vec d, neg;
      for (int k = 0; k < 100; ++k) {
        d.push_back(std::hypot(pairs(k, 0) - pairs(best, 0), pairs(k, 1) - pairs(best, 1)));
        neg.push_back(-g[k]);
      }
      CHECK(std::abs(*fdc(pairs, g) - oracle::pearson(d, neg)) <= 1e-12);
    }
  }
  SUBCASE("affine invariance") {
    Rng rng(9);
    const auto grid = build_grid(10, 10);
    Vector g(100);
    for (auto& v : g) v = rng.uniform();
    const double base = *fdc(grid.pairs, g);
    const Vector scaled = (3.5 * g.array() + 0.25).matrix();
    CHECK(std::abs(*fdc(grid.pairs, scaled) - base) <= 1e-12);
    const auto [norm, flat] = normalize_g1(g);
    CHECK(std::abs(*fdc(grid.pairs, norm) - base) <= 1e-12);
  }
}

TEST_CASE("disp") {
  SUBCASE("two opposite corners") {
    Pairs pairs(20, 2);
    pairs.setConstant(0.5);
    pairs.row(3) << 0, 0;
    pairs.row(11) << 1, 1;
    Vector g = Vector::Zero(20);
    g[3] = 5.0;
    g[11] = 4.0;
    CHECK(*disp(pairs, g) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("coincident top cells") {
    Pairs pairs(30, 2);
    pairs.setRandom();
    Vector g = Vector::Zero(30);
    for (int k : {2, 9, 17}) {
      pairs.row(k) << 0.3, 0.6;
      g[k] = 1.0 + k;
    }
    CHECK(*disp(pairs, g) == 0.0);
  }
  SUBCASE("too few cells is undefined") {
    CHECK_FALSE(disp(build_grid(3, 3).pairs, Vector::Ones(9)).has_value());
  }
  SUBCASE("2500 random cells match the brute-force oracle") {
    Rng rng(10);
    const auto grid = build_grid(50, 50);
    Vector g(2500);
    for (auto& v : g) v = rng.uniform();
    oracle::Vec F, C, h(g.data(), g.data() + g.size());
    for (Eigen::Index k = 0; k < 2500; ++k) {
      F.push_back(grid.pairs(k, 0));
      C.push_back(grid.pairs(k, 1));
    }
    CHECK(top_cells(g, 250).size() == 250);
    CHECK(std::abs(*disp(grid.pairs, g) - oracle::dispersion(F, C, h, 0.1)) <= 1e-12);
  }
  SUBCASE("ties break by row-major index") {
    const auto grid = build_grid(5, 4);
    const auto top = top_cells(Vector::Ones(20), 3);
    CHECK(top == std::vector<Eigen::Index>{0, 1, 2});
    (void)grid;
  }
  SUBCASE("permuting values outside the top cells leaves disp unchanged") {
    Rng rng(11);
    const auto grid = build_grid(20, 20);
    Vector g(400);
    for (auto& v : g) v = rng.uniform();
    const double before = *disp(grid.pairs, g);
    const auto top = top_cells(g, 40);
    std::vector<bool> in_top(400, false);
    for (auto k : top) in_top[static_cast<std::size_t>(k)] = true;
    std::vector<Eigen::Index> rest;
    for (Eigen::Index k = 0; k < 400; ++k) {
      if (!in_top[static_cast<std::size_t>(k)]) rest.push_back(k);
    }
    std::vector<double> values;
    for (auto k : rest) values.push_back(g[k]);
    std::shuffle(values.begin(), values.end(), rng);
    for (std::size_t a = 0; a < rest.size(); ++a) g[rest[a]] = values[a];
    CHECK(*disp(grid.pairs, g) == before);
  }
}

TEST_CASE("measure_snapshot") {
  SUBCASE("flat snapshot") {
    LandscapeSnapshot snap;
    snap.grid = build_grid(5, 5);
    snap.g1 = Vector::Zero(25);
    snap.g1_norm = Vector::Zero(25);
    snap.flat = true;
    const auto rec = measure_snapshot(snap);
    CHECK(rec.nzr == 0.0);
    CHECK(rec.flat);
    CHECK_FALSE(rec.fdc);
    CHECK_FALSE(rec.disp);
    CHECK_FALSE(rec.fdc_reason.empty());
  }
  SUBCASE("single funnel landscape has positive fdc") {
    LandscapeSnapshot snap;
    snap.grid = build_grid(20, 20);
    snap.g1.resize(400);
    for (Eigen::Index k = 0; k < 400; ++k) {
      const double dF = snap.grid.pairs(k, 0) - 0.6, dC = snap.grid.pairs(k, 1) - 0.9;
      snap.g1[k] = std::max(0.0, 1.0 - std::hypot(dF, dC));
    }
    snap.flat = false;
    const auto rec = measure_snapshot(snap);
    CHECK(*rec.fdc > 0.5);
    CHECK(*rec.disp < 0.3);
  }
  SUBCASE("fuzzed snapshots stay in bounds") {
    Rng rng(12);
    for (int rep = 0; rep < 1000; ++rep) {
      const int kF = 2 + static_cast<int>(rng.index(20));
      const int kC = 2 + static_cast<int>(rng.index(20));
      const double zero_rate = rng.index(4) == 0 ? 1.0 : rng.uniform();
      const auto snap = random_snapshot(rng, kF, kC, zero_rate);
      const auto rec = measure_snapshot(snap);
      REQUIRE(std::isfinite(rec.nzr));
      CHECK(rec.nzr >= 0.0);
      CHECK(rec.nzr <= 1.0);
      CHECK((rec.nzr == 0.0) == snap.flat);
      if (rec.fdc) {
        REQUIRE(std::isfinite(*rec.fdc));
        CHECK(std::abs(*rec.fdc) <= 1.0);
      }
      if (rec.disp) {
        REQUIRE(std::isfinite(*rec.disp));
        CHECK(*rec.disp >= 0.0);
        CHECK(*rec.disp <= std::sqrt(2.0) + 1e-15);
      }
    }
  }
}
