#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>

#include "hfk/complex.hpp"

namespace hfk {

// Ranks of a bigraded F_2 vector space keyed by (maslov2, alex2). Only
// positive ranks are stored.
class BigradedRanks {
 public:
  using Key = std::pair<int, int>;

  void add(int maslov2, int alex2, std::size_t rank);
  std::size_t at(int maslov2, int alex2) const;
  std::size_t total() const;
  bool empty() const noexcept { return ranks_.empty(); }
  const std::map<Key, std::size_t>& entries() const noexcept { return ranks_; }

  std::optional<int> min_alex2() const;
  std::optional<int> max_alex2() const;
  BigradedRanks level(int alex2) const;

  bool operator==(const BigradedRanks&) const = default;

 private:
  std::map<Key, std::size_t> ranks_;
};

// Homology of one Alexander level. Throws InconsistentComplex if an entry
// does not lower maslov2 by exactly 2 or if d o d != 0.
BigradedRanks level_homology(const LevelComplex& level);

BigradedRanks homology_ranks(std::span<const LevelComplex> levels, const EngineOptions& opts = {});

// Divides the rank generating function by (1 + m^-2 t^-2)^factors, i.e.
// strips factors copies of F + F[-1,-1] (doubled units). Throws NotDivisible
// when the division is not exact with non-negative quotient.
BigradedRanks deflate_to_hat(const BigradedRanks& tilde, int factors);
// Inverse of deflate_to_hat.
BigradedRanks inflate(const BigradedRanks& hat, int factors);

// Inclusion of the subcomplex of generators with alex2 <= cutoff_alex2 into
// the whole Alexander-filtered tilde complex.
struct TwoStepFiltration {
  std::shared_ptr<const FilteredComplex> full;
  int cutoff_alex2 = 0;
};

// Rank of H(sub) -> H(full) induced by inclusion. Computed from the pivot
// pairing of a column reduction in filtration order: a class born in the
// subcomplex survives exactly when its creator is never paired.
std::size_t induced_map_rank(const TwoStepFiltration& f, const EngineOptions& opts = {});

struct TwoStepRanks {
  std::size_t sub = 0;
  std::size_t full = 0;
  std::size_t map = 0;
  // Maslov-graded (doubled) split of each total.
  std::map<int, std::size_t> sub_by_maslov2;
  std::map<int, std::size_t> full_by_maslov2;
  std::map<int, std::size_t> map_by_maslov2;
};

// All three ranks over every Maslov grading. Intended for small complexes.
TwoStepRanks two_step_ranks(const TwoStepFiltration& f);

}  // namespace hfk
