#include <doctest.h>

#include <random>

#include "hfk/error.hpp"
#include "hfk/homology.hpp"
#include "hfk/invariants.hpp"
#include "hfk/snapshot.hpp"
#include "support.hpp"

#include <sstream>

namespace {

hfk::BigradedRanks from_oracle(const oracle::Ranks& r) {
  hfk::BigradedRanks out;
  for (const auto& [k, v] : r) out.add(k.first, k.second, static_cast<std::size_t>(v));
  return out;
}

hfk::BigradedRanks ranks(std::initializer_list<std::tuple<int, int, std::size_t>> list) {
  hfk::BigradedRanks out;
  for (const auto& [m, a, r] : list) out.add(m, a, r);
  return out;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("d o d = 0 on random grids (100 grids, n <= 6)") {
    std::mt19937 rng(41);
    for (int i = 0; i < 100; ++i) {
      const auto g = testing::random_grid(2 + i % 5, rng);
      for (const auto& level : hfk::full_tilde_complex(g)) {
        const auto dd = level.boundary * level.boundary;
        CHECK(dd.is_zero());
      }
      // Filtered complex too.
      const hfk::FilteredComplex fc(g);
      for (std::size_t k = 0; k < fc.size(); ++k) {
        std::map<std::size_t, int> twice;
        for (auto j : fc.boundary(k))
          for (auto i2 : fc.boundary(j)) twice[i2] ^= 1;
        for (const auto& [idx, bit] : twice) CHECK(bit == 0);
      }
    }
  }

  TEST_CASE("tilde homology agrees with the oracle on random grids") {
    std::mt19937 rng(43);
    for (int i = 0; i < 30; ++i) {
      const auto g = testing::random_grid(2 + i % 5, rng);
      CHECK(hfk::tilde_homology(g) == from_oracle(oracle::tilde_homology(testing::to_oracle(g))));
    }
  }

  TEST_CASE("frozen hat homology") {
    // Values produced by the brute-force oracle.
    CHECK(hfk::tilde_homology(testing::unknot(2)) == ranks({{0, 0, 1}, {-2, -2, 1}}));
    CHECK(hfk::hat_homology(testing::load("trefoil5.grid")) == ranks({{0, 2, 1}, {-2, 0, 1}, {-4, -2, 1}}));
    CHECK(hfk::hat_homology(testing::load("trefoil5_left.grid")) == ranks({{4, 2, 1}, {2, 0, 1}, {0, -2, 1}}));
    CHECK(hfk::hat_homology(testing::load("figure_eight6.grid")) == ranks({{2, 2, 1}, {0, 0, 3}, {-2, -2, 1}}));
    CHECK(hfk::hat_homology(testing::load("five_two7.grid")) == ranks({{4, 2, 2}, {2, 0, 3}, {0, -2, 2}}));
    CHECK(hfk::hat_homology(testing::load("torus2_5_7.grid")) ==
          ranks({{0, 4, 1}, {-2, 2, 1}, {-4, 0, 1}, {-6, -2, 1}, {-8, -4, 1}}));
    CHECK(hfk::hat_homology(testing::load("hopf_pos4.grid")) == ranks({{0, 2, 1}, {-2, 0, 2}, {-4, -2, 1}}));
    CHECK(hfk::hat_homology(testing::load("hopf_neg4.grid")) == ranks({{2, 2, 1}, {0, 0, 2}, {-2, -2, 1}}));
    CHECK(hfk::hat_homology(testing::load("unlink2_4.grid")) == ranks({{0, 0, 1}, {-2, 0, 1}}));
  }

  TEST_CASE("deflate and inflate are inverse") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> coord(-6, 6), rk(1, 3), fac(0, 4);
    for (int i = 0; i < 100; ++i) {
      hfk::BigradedRanks hat;
      for (int k = 0; k < 1 + i % 6; ++k) hat.add(coord(rng), coord(rng), static_cast<std::size_t>(rk(rng)));
      const int f = fac(rng);
      CHECK(hfk::deflate_to_hat(hfk::inflate(hat, f), f) == hat);
    }
    CHECK_THROWS_AS(hfk::deflate_to_hat(ranks({{0, 0, 1}}), 1), hfk::Error);
    CHECK_THROWS_AS(hfk::deflate_to_hat(ranks({{0, 0, 1}}), -1), hfk::Error);
  }

  TEST_CASE("level homology rejects inconsistent complexes") {
    hfk::LevelComplex bad;
    bad.grid_size = 2;
    bad.gens = {{0, 0, 0}, {1, 0, 0}};
    bad.boundary = hfk::SparseGF2Matrix(2, 2);
    bad.boundary.set_column(1, {0});  // same Maslov grading
    CHECK_THROWS_AS(hfk::level_homology(bad), hfk::Error);
  }

  TEST_CASE("induced map rank agrees with dense linear algebra") {
    std::mt19937 rng(53);
    for (int i = 0; i < 25; ++i) {
      const auto g = testing::random_grid(2 + i % 5, rng);
      const auto fc = std::make_shared<const hfk::FilteredComplex>(g);
      const auto og = testing::to_oracle(g);
      const hfk::GradingTables& t = fc->tables();
      for (int cut = t.alex2_lower_bound() - 1; cut <= t.alex2_upper_bound(); ++cut) {
        const hfk::TwoStepFiltration f{fc, cut};
        const auto want = static_cast<std::size_t>(oracle::filtered_map_rank(og, cut));
        CHECK(hfk::induced_map_rank(f) == want);
        CHECK(hfk::two_step_ranks(f).map == want);
      }
      // The whole complex computes the tilde homology of S^3: 2^(n-1).
      const hfk::TwoStepFiltration all{fc, t.alex2_upper_bound()};
      CHECK(hfk::two_step_ranks(all).full == (std::size_t{1} << (g.size() - 1)));
    }
  }

  TEST_CASE("snapshot round trip") {
    const auto g = testing::load("figure_eight6.grid");
    for (const auto& level : hfk::full_tilde_complex(g)) {
      std::stringstream ss;
      hfk::write_snapshot(ss, level);
      const auto back = hfk::read_snapshot(ss);
      CHECK(back.grid_size == level.grid_size);
      CHECK(back.level_alex2 == level.level_alex2);
      CHECK(back.gens == level.gens);
      CHECK(back.boundary == level.boundary);
    }
    std::stringstream junk("NOTASNAPSHOT");
    CHECK_THROWS_AS(hfk::read_snapshot(junk), hfk::Error);
    std::stringstream empty;
    CHECK_THROWS_AS(hfk::read_snapshot(empty), hfk::Error);
  }
}
