#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hfk {

// Column-compressed sparse matrix over F_2. Each column is a strictly
// increasing list of row indices, so entries have set semantics.
class SparseGF2Matrix {
 public:
  using Index = std::uint32_t;
  using Column = std::vector<Index>;

  SparseGF2Matrix() = default;
  SparseGF2Matrix(std::size_t rows, std::size_t cols);

  // Duplicate (row, col) pairs cancel, matching addition over F_2.
  static SparseGF2Matrix from_entries(std::size_t rows, std::size_t cols,
                                      std::span<const std::pair<Index, Index>> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nnz() const noexcept;

  const Column& column(std::size_t c) const { return columns_[c]; }
  // Replaces column c; the input is sorted and reduced mod 2.
  void set_column(std::size_t c, Column entries);
  bool get(Index row, Index col) const;

  std::vector<std::pair<Index, Index>> entries() const;
  SparseGF2Matrix transposed() const;
  SparseGF2Matrix permuted(std::span<const Index> row_perm, std::span<const Index> col_perm) const;

  bool is_zero() const noexcept;
  bool operator==(const SparseGF2Matrix& other) const = default;

  friend SparseGF2Matrix operator*(const SparseGF2Matrix& a, const SparseGF2Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

// In-place symmetric difference of two sorted index lists: acc ^= other.
void xor_into(SparseGF2Matrix::Column& acc, const SparseGF2Matrix::Column& other,
              SparseGF2Matrix::Column& scratch);

// Incremental column reduction with "lowest one" pivots. Columns are reduced
// against previously added columns only, in insertion order, which is what
// makes the pivot pairing meaningful for filtered complexes.
class ColumnReducer {
 public:
  using Index = SparseGF2Matrix::Index;

  explicit ColumnReducer(std::size_t rows);

  // Reduces the column and returns its pivot row, or nullopt if it reduced to
  // zero.
  std::optional<Index> add_column(SparseGF2Matrix::Column column);

  std::size_t rank() const noexcept { return rank_; }
  // Insertion position of the column whose pivot is this row, if any.
  std::optional<std::size_t> pivot_owner(Index row) const;

 private:
  std::vector<std::int64_t> owner_;
  std::vector<SparseGF2Matrix::Column> reduced_;
  std::vector<std::size_t> reduced_position_;
  SparseGF2Matrix::Column scratch_;
  std::size_t inserted_ = 0;
  std::size_t rank_ = 0;
};

// Rank over F_2. Columns are processed sparsest first.
std::size_t rank(const SparseGF2Matrix& m);

}  // namespace hfk
