#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "hfk/complex.hpp"
#include "hfk/homology.hpp"
#include "hfk/laurent.hpp"

namespace hfk {

// Hat homology in the lowest nonzero Alexander grading. Exponents of the
// Poincare polynomial are doubled Maslov gradings.
struct ExtremalGroup {
  int alex2_bottom = 0;
  LaurentPoly poincare{'m'};
  bool operator==(const ExtremalGroup&) const = default;
};

// Hat homology in the highest nonzero Alexander grading.
struct TopGroup {
  int alex2_top = 0;
  LaurentPoly poincare{'m'};
  bool operator==(const TopGroup&) const = default;
};

// Outcome of an extremal level scan, with the bookkeeping the CLI reports.
struct LevelScan {
  // Alexander level of the tilde complex where homology first appeared.
  int tilde_alex2 = 0;
  BigradedRanks tilde_level;
  // Generators enumerated per visited level (doubled Alexander grading).
  std::map<int, std::size_t> generator_counts;
};

// Scans tilde levels upward from the admissible lower bound and stops at the
// first level with nonzero homology. That level is the hat bottom group
// tensored with the lowest summand of V^(n-l), so it is shifted back up by
// n - l in both gradings.
ExtremalGroup bottom_group(const ValidatedGrid& g, const EngineOptions& opts = {}, LevelScan* scan = nullptr);
// Scans downward; the top tilde level equals the hat top group unshifted.
TopGroup top_group(const ValidatedGrid& g, const EngineOptions& opts = {}, LevelScan* scan = nullptr);

// Doubled minimal surface index, -alex2_bottom. For knots this is 2g.
int genus(const ValidatedGrid& g, const EngineOptions& opts = {});

// Whether H(F(bottom)) -> H(tilde complex of S^3) is nonzero, i.e.
// tau_bot = -g.
bool tau_bot_is_minus_g(const ValidatedGrid& g, const EngineOptions& opts = {});
// tau_bot_is_minus_g of the mirror.
bool tau_top_is_g(const ValidatedGrid& g, const EngineOptions& opts = {});

// Symmetrized Alexander polynomial with Delta(1) = 1. Throws NotAKnot for
// links.
LaurentPoly alexander_polynomial(const ValidatedGrid& g, const EngineOptions& opts = {});

bool is_extremal_rank_one(const ExtremalGroup& e);
// Supported in a single Maslov grading.
bool is_extremal_thin(const ExtremalGroup& e);

// Signed count sum (-1)^M rank over a Poincare polynomial with doubled
// exponents.
std::int64_t euler_characteristic(const LaurentPoly& doubled_poincare);

BigradedRanks tilde_homology(const ValidatedGrid& g, const EngineOptions& opts = {});
BigradedRanks hat_homology(const ValidatedGrid& g, const EngineOptions& opts = {});

}  // namespace hfk
