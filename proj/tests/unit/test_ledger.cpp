#include <doctest.h>

#include <filesystem>
#include <random>

#include "hfk/error.hpp"
#include "hfk/invariants.hpp"
#include "hfk/ledger.hpp"
#include "hfk/murasugi.hpp"
#include "support.hpp"

using hfk::LaurentPoly;
using hfk::LedgerEntry;

namespace {

LaurentPoly t(std::initializer_list<std::pair<const int, LaurentPoly::Coeff>> terms) {
  return LaurentPoly::from_terms(std::map<int, LaurentPoly::Coeff>(terms));
}

LedgerEntry lit(const std::string& name, LaurentPoly p, int b1) {
  return {name, std::move(p), b1, hfk::EntrySource::Literature, std::nullopt, ""};
}

LedgerEntry from_grid(const std::string& name, const std::string& file) {
  const auto g = testing::load(file);
  const auto top = hfk::top_group(g);
  return {name, hfk::ledger_polynomial(top.poincare), hfk::b1_from_index(top.alex2_top, hfk::link_components(g)),
          hfk::EntrySource::Computed, file, ""};
}

}  // namespace

TEST_SUITE("ledger") {
  TEST_CASE("reduction") {
    const auto a = t({{0, 1}, {1, 1}});
    const auto f = hfk::PosRationalFunction::reduce(a * a.shifted(2), a.shifted(5));
    CHECK(f.numerator() == a);
    CHECK(f.denominator() == t({{0, 1}}));
    CHECK(hfk::PosRationalFunction::reduce(f.numerator(), f.denominator()) == f);
    // Cancellation can leave negative coefficients.
    const auto g = hfk::PosRationalFunction::reduce(t({{0, 1}, {3, 1}}), a);
    CHECK(g.numerator() == t({{0, 1}, {1, -1}, {2, 1}}));
    CHECK_THROWS_AS(hfk::PosRationalFunction::reduce(LaurentPoly(), a), hfk::Error);
  }

  TEST_CASE("p_image examples") {
    const auto tre = from_grid("trefoil", "trefoil5.grid");
    const auto five2 = from_grid("5_2", "five_two7.grid");
    CHECK(tre.top_poincare == t({{0, 1}}));
    CHECK(tre.b1_min == 2);
    CHECK(five2.top_poincare == t({{2, 2}}));
    // A monomial class is the identity up to units.
    CHECK(hfk::p_image({{&tre, 1}}).is_one());
    CHECK(hfk::p_image({{&tre, 1}, {&tre, -1}}).is_one());
    const auto q = hfk::p_image({{&five2, 1}, {&tre, -1}});
    CHECK(q.at_one() == std::make_pair(std::int64_t{2}, std::int64_t{1}));
    CHECK_FALSE(q.is_one());
    CHECK_THROWS_AS(hfk::p_image({}), hfk::Error);
  }

  TEST_CASE("p_image is a homomorphism on random multisets") {
    std::mt19937 rng(2024);
    std::vector<LedgerEntry> pool;
    std::uniform_int_distribution<int> c(1, 3), e(0, 3);
    for (int i = 0; i < 8; ++i) {
      LaurentPoly p;
      for (int k = 0; k < 1 + i % 3; ++k) p.add_term(e(rng), c(rng));
      pool.push_back(lit("e" + std::to_string(i), p, 1));
    }
    std::uniform_int_distribution<int> pick(0, 7), sign(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<hfk::SignedEntry> a, b;
      for (int k = 0; k < 1 + trial % 4; ++k) a.emplace_back(&pool[static_cast<std::size_t>(pick(rng))], sign(rng) ? 1 : -1);
      for (int k = 0; k < 1 + trial % 3; ++k) b.emplace_back(&pool[static_cast<std::size_t>(pick(rng))], sign(rng) ? 1 : -1);
      auto ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      const auto lhs = hfk::p_image(ab);
      const auto rhs = hfk::p_image(a) * hfk::p_image(b);
      CHECK(lhs == rhs);
      // Evaluating at t = 1 recovers the rank ratio.
      long long num = 1, den = 1;
      for (const auto& [ent, s] : ab) (s > 0 ? num : den) *= ent->top_poincare.total();
      const auto [n1, d1] = lhs.at_one();
      CHECK(n1 * den == d1 * num);
    }
  }

  TEST_CASE("independence by coprimality") {
    const auto tre = lit("trefoil", t({{0, 1}}), 2);
    const auto five2 = lit("5_2", t({{2, 2}}), 2);
    const auto kt = lit("KT", t({{0, 1}, {1, 1}}), 4);
    const auto kt2 = lit("KT2", t({{0, 1}, {1, 2}, {2, 1}}), 8);
    CHECK(hfk::independent_by_coprimality({&tre, &five2}));
    CHECK(hfk::independent_by_coprimality({&tre, &kt}));
    CHECK_FALSE(hfk::independent_by_coprimality({&kt, &kt}));
    CHECK_FALSE(hfk::independent_by_coprimality({&kt, &kt2}));
    CHECK_FALSE(hfk::independent_by_coprimality({&five2, &five2}));
    CHECK_THROWS_AS(hfk::independent_by_coprimality({&kt}), hfk::Error);
  }

  TEST_CASE("cor6 and b1") {
    CHECK_FALSE(hfk::cor6_obstruction(lit("trefoil", t({{0, 1}}), 2)));
    CHECK(hfk::cor6_obstruction(lit("KT", t({{-2, 1}, {-1, 1}}), 4)));
    CHECK_FALSE(hfk::cor6_obstruction(lit("mono", t({{5, 3}}), 0)));
    const auto hopf = lit("hopf", t({{0, 1}}), 1);
    const auto tre = lit("trefoil", t({{0, 1}}), 2);
    const auto unknot = lit("unknot", t({{0, 1}}), 0);
    CHECK(hfk::b1_sum_check(hopf, hopf, tre));
    CHECK(hfk::b1_sum_check(unknot, tre, tre));
    CHECK_FALSE(hfk::b1_sum_check(hopf, hopf, lit("bad", t({{0, 1}}), 3)));
  }

  TEST_CASE("irreducibility up to degree two") {
    CHECK(hfk::irreducibility(t({{0, 1}, {1, 1}})) == hfk::Irreducibility::Irreducible);
    CHECK(hfk::irreducibility(t({{0, 1}, {2, 1}})) == hfk::Irreducibility::Irreducible);
    CHECK(hfk::irreducibility(t({{0, 1}, {1, 2}, {2, 1}})) == hfk::Irreducibility::Reducible);
    CHECK(hfk::irreducibility(t({{0, 2}, {1, 2}})) == hfk::Irreducibility::Reducible);
    CHECK(hfk::irreducibility(t({{0, 1}, {3, 1}})) == hfk::Irreducibility::Undetermined);
  }

  TEST_CASE("entries are checked") {
    CHECK_THROWS_AS(hfk::check_entry(lit("zero", LaurentPoly(), 0)), hfk::Error);
    CHECK_THROWS_AS(hfk::check_entry(lit("neg", t({{0, -1}}), 0)), hfk::Error);
    CHECK_THROWS_AS(hfk::check_entry(lit("b1", t({{0, 1}}), -1)), hfk::Error);
    LedgerEntry computed{"c", t({{0, 1}}), 0, hfk::EntrySource::Computed, std::nullopt, ""};
    CHECK_THROWS_AS(hfk::check_entry(computed), hfk::Error);
  }

  TEST_CASE("ledger file persistence") {
    const auto dir = std::filesystem::temp_directory_path() / "hfk_ledger_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "ledger.json";
    std::filesystem::remove(path);
    auto l = hfk::Ledger::open(path);
    CHECK(l.entries().empty());
    l.add(from_grid("trefoil", "trefoil5.grid"));
    l.add(lit("KT", t({{0, 1}, {1, 1}}), 4));
    CHECK_THROWS_AS(l.add(lit("KT", t({{0, 1}}), 4)), hfk::Error);
    l.save();
    const auto back = hfk::Ledger::open(path);
    CHECK(back.entries() == l.entries());
    CHECK(back.get("KT").b1_min == 4);
    CHECK_THROWS_AS(back.get("nope"), hfk::Error);
    CHECK_THROWS_AS(hfk::Ledger::from_json("{\"schema\": 2, \"entries\": []}"), hfk::Error);
    CHECK_THROWS_AS(hfk::Ledger::from_json("not json"), hfk::Error);
    std::filesystem::remove_all(dir);
  }
}
