#include "hfk/gf2.hpp"

#include <algorithm>
#include <numeric>

#include "hfk/error.hpp"

namespace hfk {

namespace {

using Index = SparseGF2Matrix::Index;
using Column = SparseGF2Matrix::Column;

// Sort and cancel pairs.
void normalize(Column& col) {
  std::sort(col.begin(), col.end());
  Column out;
  out.reserve(col.size());
  for (std::size_t i = 0; i < col.size();) {
    std::size_t j = i;
    while (j < col.size() && col[j] == col[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(col[i]);
    i = j;
  }
  col = std::move(out);
}

}  // namespace

SparseGF2Matrix::SparseGF2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseGF2Matrix SparseGF2Matrix::from_entries(std::size_t rows, std::size_t cols,
                                              std::span<const std::pair<Index, Index>> entries) {
  SparseGF2Matrix m(rows, cols);
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) throw Error(ErrorCode::InvalidArgument, "matrix entry out of range");
    m.columns_[c].push_back(r);
  }
  for (auto& col : m.columns_) normalize(col);
  return m;
}

std::size_t SparseGF2Matrix::nnz() const noexcept {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void SparseGF2Matrix::set_column(std::size_t c, Column entries) {
  normalize(entries);
  if (!entries.empty() && entries.back() >= rows_)
    throw Error(ErrorCode::InvalidArgument, "matrix entry out of range");
  columns_.at(c) = std::move(entries);
}

bool SparseGF2Matrix::get(Index row, Index col) const {
  const auto& c = columns_.at(col);
  return std::binary_search(c.begin(), c.end(), row);
}

std::vector<std::pair<Index, Index>> SparseGF2Matrix::entries() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (Index r : columns_[c]) out.emplace_back(r, static_cast<Index>(c));
  return out;
}

SparseGF2Matrix SparseGF2Matrix::transposed() const {
  SparseGF2Matrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (Index r : columns_[c]) t.columns_[r].push_back(static_cast<Index>(c));
  return t;
}

SparseGF2Matrix SparseGF2Matrix::permuted(std::span<const Index> row_perm,
                                          std::span<const Index> col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols())
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  SparseGF2Matrix out(rows_, cols());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    Column col;
    col.reserve(columns_[c].size());
    for (Index r : columns_[c]) col.push_back(row_perm[r]);
    std::sort(col.begin(), col.end());
    out.columns_[col_perm[c]] = std::move(col);
  }
  return out;
}

bool SparseGF2Matrix::is_zero() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

SparseGF2Matrix operator*(const SparseGF2Matrix& a, const SparseGF2Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
  SparseGF2Matrix out(a.rows(), b.cols());
  Column scratch;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    Column acc;
    for (Index k : b.column(c)) xor_into(acc, a.column(k), scratch);
    out.columns_[c] = std::move(acc);
  }
  return out;
}

void xor_into(Column& acc, const Column& other, Column& scratch) {
  scratch.clear();
  scratch.reserve(acc.size() + other.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  acc.swap(scratch);
}

ColumnReducer::ColumnReducer(std::size_t rows) : owner_(rows, -1) {}

std::optional<Index> ColumnReducer::add_column(Column column) {
  const std::size_t position = inserted_++;
  while (!column.empty()) {
    const Index low = column.back();
    const std::int64_t owner = owner_[low];
    if (owner < 0) {
      owner_[low] = static_cast<std::int64_t>(reduced_.size());
      reduced_.push_back(std::move(column));
      reduced_position_.push_back(position);
      ++rank_;
      return low;
    }
    xor_into(column, reduced_[static_cast<std::size_t>(owner)], scratch_);
  }
  return std::nullopt;
}

std::optional<std::size_t> ColumnReducer::pivot_owner(Index row) const {
  const std::int64_t owner = owner_.at(row);
  if (owner < 0) return std::nullopt;
  return reduced_position_[static_cast<std::size_t>(owner)];
}

std::size_t rank(const SparseGF2Matrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.column(a).size() < m.column(b).size();
  });
  ColumnReducer reducer(m.rows());
  for (std::size_t c : order) reducer.add_column(m.column(c));
  return reducer.rank();
}

}  // namespace hfk
