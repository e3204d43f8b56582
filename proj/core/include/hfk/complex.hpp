#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hfk/gf2.hpp"
#include "hfk/grid.hpp"

namespace hfk {

struct EngineOptions {
  // Enumeration aborts with ResourceBound past this many generators.
  std::size_t max_generators = 100'000'000;
  // 0 means one worker per hardware thread.
  unsigned threads = 0;
};

// A permutation packed four bits per column, column 0 in the most significant
// nibble, so numeric order is lexicographic order of the permutation.
using PermCode = std::uint64_t;

PermCode encode_perm(std::span<const int> perm);
std::array<int, kMaxGridSize> decode_perm(PermCode code, int n);

struct Gradings {
  int maslov2 = 0;
  int alex2 = 0;
  bool operator==(const Gradings&) const = default;
};

// Chain-group basis element: the lattice point in column i sits at row
// perm[i]. Gradings are doubled so half-integral link gradings stay integral.
struct GridGenerator {
  PermCode code = 0;
  int maslov2 = 0;
  int alex2 = 0;

  std::vector<int> perm(int n) const;
  bool operator==(const GridGenerator&) const = default;
};

// Per-grid lookup tables shared by grading evaluation, enumeration and
// rectangle counting.
//
// Absolute gradings use the planar pair-counting formulas
//   M_O(x) = J(x - O, x - O) + 1,   M_X likewise,
//   2A(x)  = M_O(x) - M_X(x) - (n - l),
// where J counts pairs with both coordinates strictly increasing
// (symmetrized). Lattice points sit at integer coordinates and markings at
// cell centres, so comparisons never tie.
class GradingTables {
 public:
  explicit GradingTables(const ValidatedGrid& g);

  int size() const noexcept { return n_; }
  int components() const noexcept { return components_; }

  Gradings gradings(std::span<const int> perm) const;

  // alex2(x) = alex_const() + sum_i alex_weight(i, x_i).
  int alex_weight(int col, int row) const { return alex_weight_[idx(col, row)]; }
  int alex_const() const noexcept { return alex_const_; }
  // maslov2(x) = maslov_const() + 2 * (noninversions(x) - sum_i o_weight(i, x_i)).
  int o_weight(int col, int row) const { return o_weight_[idx(col, row)]; }
  int maslov_const() const noexcept { return maslov_const_; }

  // Admissible bounds on alex2 over all generators, ignoring the
  // permutation constraint.
  int alex2_lower_bound() const noexcept { return alex_const_ + suffix_min_[0]; }
  int alex2_upper_bound() const noexcept { return alex_const_ + suffix_max_[0]; }
  int suffix_min(int col) const { return suffix_min_[static_cast<std::size_t>(col)]; }
  int suffix_max(int col) const { return suffix_max_[static_cast<std::size_t>(col)]; }

  // Marking counts inside the torus rectangle whose cells span columns
  // left .. left+width-1 and rows bottom .. bottom+height-1 (cyclically).
  int o_inside(int left, int width, int bottom, int height) const {
    return o_count_[rect_idx(left, width, bottom, height)];
  }
  int x_inside(int left, int width, int bottom, int height) const {
    return x_count_[rect_idx(left, width, bottom, height)];
  }

 private:
  std::size_t idx(int col, int row) const {
    return static_cast<std::size_t>(col) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(row);
  }
  std::size_t rect_idx(int left, int width, int bottom, int height) const {
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(left) * n + static_cast<std::size_t>(width)) * n +
            static_cast<std::size_t>(bottom)) * n + static_cast<std::size_t>(height);
  }

  int n_ = 0;
  int components_ = 1;
  std::vector<int> o_weight_;
  std::vector<int> alex_weight_;
  int maslov_const_ = 0;
  int alex_const_ = 0;
  std::vector<int> suffix_min_;
  std::vector<int> suffix_max_;
  std::vector<std::uint8_t> o_count_;
  std::vector<std::uint8_t> x_count_;
};

// Throws NotAPermutation if perm is not a permutation of {0..n-1}.
Gradings gradings(const ValidatedGrid& g, std::span<const int> perm);

// Which markings a counted rectangle must avoid.
enum class RectanglePolicy {
  AvoidAllMarkings,  // associated graded (Alexander-preserving) differential
  AvoidO,            // Alexander-filtered differential; X markings allowed
};

// Codes of the generators y reached from x by an odd number of empty
// rectangles. Each transposition of two columns is realized by exactly two
// rectangles on the torus and both are examined.
std::vector<PermCode> rectangle_targets(const GradingTables& t, PermCode x, RectanglePolicy policy);

// Generators with alex2 in [lo, hi], sorted by (alex2, code). Branch-and-bound
// over partial permutations; throws ResourceBound past the generator limit.
std::vector<GridGenerator> generators_in_window(const GradingTables& t, int lo, int hi,
                                                const EngineOptions& opts = {});

// Sum over all n! generators of (-1)^M t^A, keyed by alex2. Streams the
// enumeration without storing generators.
std::map<int, std::int64_t> graded_euler_characteristic(const GradingTables& t, const EngineOptions& opts = {});

// Generators with alex2 == level, sorted by (maslov2, code). An empty level
// returns an empty list.
std::vector<GridGenerator> generators_in_level(const ValidatedGrid& g, int alex2,
                                               const EngineOptions& opts = {});
std::vector<GridGenerator> generators_in_level(const GradingTables& t, int alex2,
                                               const EngineOptions& opts = {});

// One Alexander level of the associated graded tilde complex. Both rows and
// columns of `boundary` index `gens`.
struct LevelComplex {
  int grid_size = 0;
  int level_alex2 = 0;
  std::vector<GridGenerator> gens;
  SparseGF2Matrix boundary;
};

LevelComplex boundary_at_level(const ValidatedGrid& g, int alex2, const EngineOptions& opts = {});
LevelComplex boundary_at_level(const GradingTables& t, int alex2, const EngineOptions& opts = {});
// Builds the level complex on an already enumerated level.
LevelComplex build_level_complex(const GradingTables& t, int alex2, std::vector<GridGenerator> gens,
                                 const EngineOptions& opts = {});

// Every nonempty Alexander level of the tilde complex, ascending.
std::vector<LevelComplex> full_tilde_complex(const ValidatedGrid& g, const EngineOptions& opts = {});

// The whole Alexander-filtered tilde complex of S^3 (rectangles avoid O only).
// Generators are sorted by (alex2, code), which is a filtration order: every
// boundary entry points to an index with alex2 no larger.
class FilteredComplex {
 public:
  FilteredComplex(const ValidatedGrid& g, const EngineOptions& opts = {});

  const GradingTables& tables() const noexcept { return tables_; }
  const std::vector<GridGenerator>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  std::size_t index_of(PermCode code) const;
  // Boundary of generator k as sorted indices into gens().
  SparseGF2Matrix::Column boundary(std::size_t k) const;

 private:
  GradingTables tables_;
  std::vector<GridGenerator> gens_;
  std::vector<std::pair<PermCode, std::uint32_t>> lookup_;
};

}  // namespace hfk
