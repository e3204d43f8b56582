#include <doctest.h>

#include <cstdlib>
#include <random>

#include "hfk/error.hpp"
#include "hfk/invariants.hpp"
#include "support.hpp"

using hfk::LaurentPoly;

namespace {

LaurentPoly m(std::initializer_list<std::pair<const int, LaurentPoly::Coeff>> terms) {
  return LaurentPoly::from_terms(std::map<int, LaurentPoly::Coeff>(terms), 'm');
}

LaurentPoly t(std::initializer_list<std::pair<const int, LaurentPoly::Coeff>> terms) {
  return LaurentPoly::from_terms(std::map<int, LaurentPoly::Coeff>(terms));
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("bottom groups") {
    CHECK(hfk::bottom_group(testing::unknot(3)) == hfk::ExtremalGroup{0, m({{0, 1}})});
    CHECK(hfk::bottom_group(testing::load("trefoil5.grid")) == hfk::ExtremalGroup{-2, m({{-4, 1}})});
    CHECK(hfk::bottom_group(testing::load("figure_eight6.grid")) == hfk::ExtremalGroup{-2, m({{-2, 1}})});
    CHECK(hfk::bottom_group(testing::load("five_two7.grid")) == hfk::ExtremalGroup{-2, m({{0, 2}})});
    CHECK(hfk::bottom_group(testing::load("hopf_pos4.grid")) == hfk::ExtremalGroup{-2, m({{-4, 1}})});
    CHECK(hfk::bottom_group(testing::load("hopf_neg4.grid")) == hfk::ExtremalGroup{-2, m({{-2, 1}})});
    CHECK(hfk::bottom_group(testing::load("unlink2_4.grid")) == hfk::ExtremalGroup{0, m({{0, 1}, {-2, 1}})});
  }

  TEST_CASE("bottom group equals the lowest level of the oracle's hat homology") {
    std::mt19937 rng(61);
    for (int i = 0; i < 30; ++i) {
      const auto g = testing::random_grid(2 + i % 5, rng);
      const auto hat = oracle::hat_homology(testing::to_oracle(g));
      int lo = 1 << 20;
      for (const auto& [k, r] : hat) lo = std::min(lo, k.second);
      LaurentPoly want('m');
      for (const auto& [k, r] : hat)
        if (k.second == lo) want.add_term(k.first, r);
      CHECK(hfk::bottom_group(g) == hfk::ExtremalGroup{lo, want});
    }
  }

  TEST_CASE("top groups") {
    CHECK(hfk::top_group(testing::load("trefoil5.grid")) == hfk::TopGroup{2, m({{0, 1}})});
    CHECK(hfk::top_group(testing::load("trefoil6.grid")) == hfk::TopGroup{2, m({{0, 1}})});
    CHECK(hfk::top_group(testing::load("trefoil5_left.grid")) == hfk::TopGroup{2, m({{4, 1}})});
  }

  TEST_CASE("genus") {
    CHECK(hfk::genus(testing::unknot(4)) == 0);
    CHECK(hfk::genus(testing::load("trefoil5.grid")) == 2);
    CHECK(hfk::genus(testing::load("figure_eight6.grid")) == 2);
    CHECK(hfk::genus(testing::load("torus2_5_7.grid")) == 4);
  }

  TEST_CASE("genus and bottom ranks are mirror invariant") {
    std::mt19937 rng(67);
    for (int i = 0; i < 30; ++i) {
      const auto g = testing::random_grid(2 + i % 5, rng);
      const auto b = hfk::bottom_group(g);
      const auto top_of_mirror = hfk::top_group(hfk::mirror(g));
      CHECK(hfk::genus(hfk::mirror(g)) == hfk::genus(g));
      // HFK(m(L))_{d, a} = HFK(L)_{-d, -a} for knots; links pick up a shift
      // of l - 1 in Maslov, so compare total ranks only.
      CHECK(top_of_mirror.alex2_top == -b.alex2_bottom);
      CHECK(top_of_mirror.poincare.total() == b.poincare.total());
      if (hfk::link_components(g) == 1) CHECK(top_of_mirror.poincare == b.poincare.reflected());
    }
  }

  TEST_CASE("tau extremality") {
    CHECK(hfk::tau_bot_is_minus_g(testing::unknot(3)));
    CHECK(hfk::tau_bot_is_minus_g(testing::load("trefoil5_left.grid")));
    CHECK_FALSE(hfk::tau_bot_is_minus_g(testing::load("trefoil5.grid")));
    CHECK_FALSE(hfk::tau_bot_is_minus_g(testing::load("figure_eight6.grid")));
    CHECK(hfk::tau_top_is_g(testing::load("trefoil5.grid")));
    CHECK_FALSE(hfk::tau_top_is_g(testing::load("figure_eight6.grid")));
    CHECK(hfk::tau_top_is_g(testing::load("hopf_pos4.grid")));
    CHECK_FALSE(hfk::tau_top_is_g(testing::load("hopf_neg4.grid")));
    CHECK(hfk::tau_top_is_g(testing::load("torus2_5_7.grid")));
  }

  TEST_CASE("tau tests agree with the oracle") {
    std::mt19937 rng(71);
    for (int i = 0; i < 25; ++i) {
      const auto g = testing::random_grid(2 + i % 5, rng);
      const auto og = testing::to_oracle(g);
      hfk::LevelScan scan;
      hfk::bottom_group(g, {}, &scan);
      CHECK(hfk::tau_bot_is_minus_g(g) == (oracle::filtered_map_rank(og, scan.tilde_alex2) > 0));
    }
  }

  TEST_CASE("Alexander polynomials") {
    CHECK(hfk::alexander_polynomial(testing::unknot(4)) == t({{0, 1}}));
    CHECK(hfk::alexander_polynomial(testing::load("trefoil5.grid")) == t({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(hfk::alexander_polynomial(testing::load("trefoil6.grid")) == t({{1, 1}, {0, -1}, {-1, 1}}));
    CHECK(hfk::alexander_polynomial(testing::load("figure_eight6.grid")) == t({{1, -1}, {0, 3}, {-1, -1}}));
    CHECK(hfk::alexander_polynomial(testing::load("five_two7.grid")) == t({{1, 2}, {0, -3}, {-1, 2}}));
    CHECK_THROWS_AS(hfk::alexander_polynomial(testing::load("hopf_pos4.grid")), hfk::Error);
  }

  TEST_CASE("Alexander polynomial properties on random knots") {
    std::mt19937 rng(73);
    int knots = 0;
    for (int i = 0; knots < 30 && i < 500; ++i) {
      const auto g = testing::random_grid(3 + i % 4, rng);
      if (hfk::link_components(g) != 1) continue;
      ++knots;
      const auto d = hfk::alexander_polynomial(g);
      CHECK(d.reflected() == d);
      CHECK(d.evaluate_at_one() == 1);
      // Euler characteristic of the oracle's hat homology.
      LaurentPoly chi;
      for (const auto& [a2, c] : oracle::euler(oracle::hat_homology(testing::to_oracle(g)))) chi.add_term(a2 / 2, c);
      CHECK((chi == d || chi == -d));
      const auto b = hfk::bottom_group(g);
      const auto lead = d.coefficient(b.alex2_bottom / 2);
      CHECK(std::llabs(lead) <= b.poincare.total());
      CHECK(std::llabs(lead) == std::llabs(hfk::euler_characteristic(b.poincare)));
    }
  }

  TEST_CASE("extremal predicates") {
    CHECK(hfk::is_extremal_rank_one({-2, m({{-4, 1}})}));
    CHECK(hfk::is_extremal_thin({-2, m({{-4, 1}})}));
    CHECK_FALSE(hfk::is_extremal_rank_one({-2, m({{0, 2}})}));
    CHECK(hfk::is_extremal_thin({-2, m({{0, 2}})}));
    CHECK_FALSE(hfk::is_extremal_thin({0, m({{0, 1}, {2, 1}})}));
    CHECK(hfk::euler_characteristic(m({{0, 1}, {-2, 1}})) == 0);
    CHECK(hfk::euler_characteristic(m({{-4, 1}})) == 1);
    CHECK(hfk::euler_characteristic(m({{-2, 3}})) == -3);
  }

  TEST_CASE("extremal groups of the 11-crossing mutants") {
    CHECK(hfk::bottom_group(testing::load("kinoshita_terasaka11.grid")) == hfk::ExtremalGroup{-4, m({{-2, 1}, {-4, 1}})});
    CHECK(hfk::bottom_group(testing::load("conway11.grid")) == hfk::ExtremalGroup{-6, m({{-4, 1}, {-6, 1}})});
  }
}
