#include <doctest.h>

#include "hfk/error.hpp"
#include "hfk/murasugi.hpp"
#include "support.hpp"

using hfk::LaurentPoly;

namespace {

hfk::CaseGrid entry(const std::string& file, std::optional<int> index2) {
  auto g = testing::load(file);
  const int l = hfk::link_components(g);
  return {g, {l, index2}, file};
}

hfk::MurasugiCase make(const std::string& a, const std::string& b, const std::string& s, int two_n) {
  return {a + "*" + b, entry(a, 2), entry(b, 2), entry(s, 2), two_n, std::nullopt, std::nullopt};
}

}  // namespace

TEST_SUITE("murasugi") {
  TEST_CASE("surface index") {
    CHECK(hfk::surface_index(1, 1) == 0);
    CHECK(hfk::surface_index(2, 0) == 2);
    CHECK(hfk::surface_index(1, -1) == 2);
    CHECK_THROWS_AS(hfk::surface_index(1, 2), hfk::Error);
    CHECK(hfk::b1_from_index(2, 2) == 1);
    CHECK(hfk::b1_from_index(2, 1) == 2);
  }

  TEST_CASE("bottom groups multiply on plumbings") {
    const auto r = hfk::verify_theorem1(make("hopf_pos4.grid", "hopf_pos4.grid", "trefoil5.grid", 4));
    CHECK(r.passed);
    CHECK(r.product == LaurentPoly::monomial(-4, 1, 'm'));
    CHECK(r.euler_multiplicative);
    CHECK(hfk::verify_theorem1(make("hopf_pos4.grid", "hopf_neg4.grid", "figure_eight6.grid", 4)).passed);
    CHECK(hfk::verify_theorem1(make("hopf_neg4.grid", "hopf_neg4.grid", "trefoil5_left.grid", 4)).passed);
  }

  TEST_CASE("corrupted case fails the tensor-product check") {
    const auto r = hfk::verify_theorem1(make("hopf_pos4.grid", "hopf_neg4.grid", "trefoil5.grid", 4));
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("declared index mismatch") {
    auto c = make("hopf_pos4.grid", "hopf_pos4.grid", "trefoil5.grid", 4);
    c.sum.meta.seifert_index_doubled = 4;
    try {
      hfk::verify_theorem1(c);
      FAIL("expected IndexMismatch");
    } catch (const hfk::Error& e) {
      CHECK(e.code() == hfk::ErrorCode::IndexMismatch);
    }
  }

  TEST_CASE("case validation") {
    auto c = make("hopf_pos4.grid", "hopf_pos4.grid", "trefoil5.grid", 3);
    CHECK_THROWS_AS(hfk::check_case(c), hfk::Error);
    c.polygon_sides_2n = 4;
    c.sum.meta.components = 2;
    CHECK_THROWS_AS(hfk::check_case(c), hfk::Error);
  }

  TEST_CASE("connected sums through the automatic construction") {
    const auto tre = entry("trefoil5.grid", 2);
    const auto left = entry("trefoil5_left.grid", 2);
    const auto granny = hfk::connected_sum_case(tre, tre);
    CHECK(granny.sum.meta.seifert_index_doubled == 4);
    const auto r1 = hfk::verify_theorem1(granny);
    CHECK(r1.passed);
    CHECK(r1.parts[2].bottom.poincare == LaurentPoly::monomial(-8, 1, 'm'));
    const auto r2 = hfk::verify_theorem2(hfk::connected_sum_case(left, tre));
    CHECK(r2.passed);
    CHECK_FALSE(*r2.parts[0].tau_top_is_g);
    CHECK(*r2.parts[1].tau_top_is_g);
    CHECK_FALSE(*r2.parts[2].tau_top_is_g);
  }

  TEST_CASE("tau = g truth table") {
    const auto tt = hfk::verify_theorem2(make("hopf_pos4.grid", "hopf_pos4.grid", "trefoil5.grid", 4));
    CHECK(tt.passed);
    CHECK(*tt.parts[2].tau_top_is_g);
    const auto tf = hfk::verify_theorem2(make("hopf_pos4.grid", "hopf_neg4.grid", "figure_eight6.grid", 4));
    CHECK(tf.passed);
    CHECK_FALSE(*tf.parts[2].tau_top_is_g);
    const auto ff = hfk::verify_theorem2(make("hopf_neg4.grid", "hopf_neg4.grid", "trefoil5_left.grid", 4));
    CHECK(ff.passed);
  }

  TEST_CASE("case files") {
    const auto c = hfk::load_case(testing::corpus("cases/hopf_pos_plumb_hopf_pos.json"));
    CHECK(c.polygon_sides_2n == 4);
    CHECK(c.expect_theorem1 == true);
    CHECK(c.summand1.meta.components == 2);
    CHECK_THROWS_AS(hfk::load_case(testing::corpus("cases/missing.json")), hfk::Error);
  }

  TEST_CASE("cable predictions") {
    const auto one = LaurentPoly::monomial(0, 1, 'm');
    // p = 1 is the identity.
    const auto id = hfk::cable_top_group_predict(1, 5, 2, LaurentPoly::monomial(-2, 3, 'm'));
    CHECK(id.alex2 == 2);
    CHECK(id.poincare == LaurentPoly::monomial(-2, 3, 'm'));
    // (2, 3) cable of the unknot is the right trefoil.
    const auto rt = hfk::cable_top_group_predict(2, 3, 0, one);
    CHECK(rt.alex2 == 2);
    CHECK(rt.poincare == one);
    CHECK(hfk::top_group(testing::load("trefoil5.grid")) == hfk::TopGroup{rt.alex2, rt.poincare});
    // (2, -3) cable of the unknot is the left trefoil, top at Maslov 2.
    const auto lt = hfk::cable_top_group_predict(2, -3, 0, one);
    CHECK(hfk::top_group(testing::load("trefoil5_left.grid")) == hfk::TopGroup{lt.alex2, lt.poincare});
    // (2, 5) cable of the unknot is T(2,5).
    const auto t25 = hfk::cable_top_group_predict(2, 5, 0, one);
    CHECK(hfk::top_group(testing::load("torus2_5_7.grid")) == hfk::TopGroup{t25.alex2, t25.poincare});
    CHECK_THROWS_AS(hfk::cable_top_group_predict(2, 0, 0, one), hfk::Error);
    CHECK_THROWS_AS(hfk::cable_top_group_predict(0, 3, 0, one), hfk::Error);
  }
}
