#include "hfk/invariants.hpp"

#include <memory>
#include <vector>

#include "hfk/error.hpp"

namespace hfk {

namespace {

// Every generator has the same alex2 parity; the identity fixes it.
int alex2_parity(const GradingTables& t) {
  std::vector<int> identity(static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) identity[static_cast<std::size_t>(i)] = i;
  return ((t.gradings(identity).alex2 % 2) + 2) % 2;
}

int align(int value, int parity, int direction) {
  if (((value % 2) + 2) % 2 != parity) value += direction;
  return value;
}

// Walks levels from `start` in steps of `step` until one has homology.
LevelScan scan_levels(const GradingTables& t, int start, int stop, int step, const EngineOptions& opts) {
  LevelScan scan;
  for (int a = start; step > 0 ? a <= stop : a >= stop; a += step) {
    auto gens = generators_in_level(t, a, opts);
    scan.generator_counts[a] = gens.size();
    if (gens.empty()) continue;
    const auto level = build_level_complex(t, a, std::move(gens), opts);
    auto ranks = level_homology(level);
    if (!ranks.empty()) {
      scan.tilde_alex2 = a;
      scan.tilde_level = std::move(ranks);
      return scan;
    }
  }
  throw Error(ErrorCode::InconsistentComplex, "no Alexander level carries homology");
}

LaurentPoly maslov_poly(const BigradedRanks& level, int shift) {
  LaurentPoly p('m');
  for (const auto& [k, r] : level.entries()) p.add_term(k.first + shift, static_cast<LaurentPoly::Coeff>(r));
  return p;
}

}  // namespace

ExtremalGroup bottom_group(const ValidatedGrid& g, const EngineOptions& opts, LevelScan* scan) {
  const GradingTables t(g);
  const int parity = alex2_parity(t);
  auto s = scan_levels(t, align(t.alex2_lower_bound(), parity, 1), t.alex2_upper_bound(), 2, opts);
  const int shift = 2 * (t.size() - t.components());
  ExtremalGroup out{s.tilde_alex2 + shift, maslov_poly(s.tilde_level, shift)};
  if (scan) *scan = std::move(s);
  return out;
}

TopGroup top_group(const ValidatedGrid& g, const EngineOptions& opts, LevelScan* scan) {
  const GradingTables t(g);
  const int parity = alex2_parity(t);
  auto s = scan_levels(t, align(t.alex2_upper_bound(), parity, -1), t.alex2_lower_bound(), -2, opts);
  TopGroup out{s.tilde_alex2, maslov_poly(s.tilde_level, 0)};
  if (scan) *scan = std::move(s);
  return out;
}

int genus(const ValidatedGrid& g, const EngineOptions& opts) { return -bottom_group(g, opts).alex2_bottom; }

bool tau_bot_is_minus_g(const ValidatedGrid& g, const EngineOptions& opts) {
  LevelScan scan;
  bottom_group(g, opts, &scan);
  TwoStepFiltration f{std::make_shared<const FilteredComplex>(g, opts), scan.tilde_alex2};
  return induced_map_rank(f, opts) > 0;
}

bool tau_top_is_g(const ValidatedGrid& g, const EngineOptions& opts) { return tau_bot_is_minus_g(mirror(g), opts); }

LaurentPoly alexander_polynomial(const ValidatedGrid& g, const EngineOptions& opts) {
  const GradingTables t(g);
  if (t.components() != 1)
    throw Error(ErrorCode::NotAKnot, "grid presents a " + std::to_string(t.components()) + "-component link");
  // For a knot alex2 is even, so t-exponents are alex2 / 2.
  LaurentPoly chi;
  for (const auto& [a2, c] : graded_euler_characteristic(t, opts)) chi.add_term(a2 / 2, c);
  // Each V factor contributes 1 - t^-1.
  const LaurentPoly v = LaurentPoly::monomial(0) - LaurentPoly::monomial(-1);
  LaurentPoly delta = chi;
  for (int i = 0; i < t.size() - 1; ++i) delta = divide_exact(delta, v);
  const int lo = delta.min_exponent();
  const int hi = delta.max_exponent();
  if ((lo + hi) % 2 != 0) throw Error(ErrorCode::InconsistentComplex, "Alexander polynomial has even span parity");
  delta = delta.shifted(-(lo + hi) / 2);
  if (delta.evaluate_at_one() < 0) delta = -delta;
  return delta;
}

bool is_extremal_rank_one(const ExtremalGroup& e) { return e.poincare.total() == 1; }

bool is_extremal_thin(const ExtremalGroup& e) { return e.poincare.support_size() == 1; }

std::int64_t euler_characteristic(const LaurentPoly& doubled_poincare) {
  std::int64_t chi = 0;
  for (const auto& [e, c] : doubled_poincare.terms()) {
    // Floor division keeps the sign rule consistent for negative exponents.
    const int m = e >= 0 ? e / 2 : -((-e + 1) / 2);
    chi += (m % 2 == 0) ? c : -c;
  }
  return chi;
}

BigradedRanks tilde_homology(const ValidatedGrid& g, const EngineOptions& opts) {
  const auto levels = full_tilde_complex(g, opts);
  return homology_ranks(levels, opts);
}

BigradedRanks hat_homology(const ValidatedGrid& g, const EngineOptions& opts) {
  return deflate_to_hat(tilde_homology(g, opts), g.size() - link_components(g));
}

}  // namespace hfk
