#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hfk/gf2.hpp"

using hfk::SparseGF2Matrix;

namespace {

// Dense reference rank.
std::size_t dense_rank(const SparseGF2Matrix& m) {
  std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols(), false));
  for (auto [r, c] : m.entries()) rows[r][c] = true;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < m.cols(); ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

SparseGF2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<std::pair<SparseGF2Matrix::Index, SparseGF2Matrix::Index>> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (bit(rng)) e.emplace_back(static_cast<SparseGF2Matrix::Index>(r), static_cast<SparseGF2Matrix::Index>(c));
  return SparseGF2Matrix::from_entries(rows, cols, e);
}

}  // namespace

TEST_SUITE("gf2") {
  TEST_CASE("duplicate entries cancel") {
    const std::vector<std::pair<SparseGF2Matrix::Index, SparseGF2Matrix::Index>> e{{0, 0}, {0, 0}, {1, 0}};
    const auto m = SparseGF2Matrix::from_entries(2, 1, e);
    CHECK(m.nnz() == 1);
    CHECK(m.get(1, 0));
    CHECK_FALSE(m.get(0, 0));
  }

  TEST_CASE("empty and degenerate shapes") {
    CHECK(hfk::rank(SparseGF2Matrix(0, 0)) == 0);
    CHECK(hfk::rank(SparseGF2Matrix(5, 0)) == 0);
    CHECK(hfk::rank(SparseGF2Matrix(0, 5)) == 0);
    CHECK(SparseGF2Matrix(3, 3).is_zero());
  }

  TEST_CASE("rank matches dense elimination") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
      const auto m = random_matrix(rng, 1 + rng() % 30, 1 + rng() % 30, 0.05 + 0.4 * (i % 5) / 5.0);
      CHECK(hfk::rank(m) == dense_rank(m));
      CHECK(hfk::rank(m.transposed()) == hfk::rank(m));
    }
  }

  TEST_CASE("rank is invariant under row and column permutations") {
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
      const auto m = random_matrix(rng, 20, 25, 0.15);
      std::vector<SparseGF2Matrix::Index> rp(20), cp(25);
      std::iota(rp.begin(), rp.end(), 0u);
      std::iota(cp.begin(), cp.end(), 0u);
      std::shuffle(rp.begin(), rp.end(), rng);
      std::shuffle(cp.begin(), cp.end(), rng);
      CHECK(hfk::rank(m.permuted(rp, cp)) == hfk::rank(m));
    }
  }

  TEST_CASE("product and transpose") {
    std::mt19937 rng(1);
    const auto a = random_matrix(rng, 6, 7, 0.3);
    const auto b = random_matrix(rng, 7, 5, 0.3);
    CHECK((a * b).transposed() == b.transposed() * a.transposed());
    CHECK(a.transposed().transposed() == a);
  }

  TEST_CASE("column reducer pivots") {
    hfk::ColumnReducer red(4);
    CHECK(red.add_column({0, 2}) == 2u);
    CHECK(red.add_column({1, 2}) == 1u);  // reduced by the first column
    CHECK_FALSE(red.add_column({0, 1}).has_value());
    CHECK(red.rank() == 2);
    CHECK(red.pivot_owner(2) == 0u);
    CHECK(red.pivot_owner(1) == 1u);
    CHECK_FALSE(red.pivot_owner(3).has_value());
  }
}
