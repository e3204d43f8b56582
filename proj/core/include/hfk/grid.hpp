#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hfk {

// Largest supported grid. Generators are packed four bits per column into a
// 64-bit code, so the limit is structural.
inline constexpr int kMaxGridSize = 16;

// Raw marking data as read from a file or built by hand.
//
// Convention used everywhere in the library: rows are indexed bottom to top,
// columns left to right. x_cols[r] is the column of the X marking in row r and
// o_cols[r] the column of the O marking. Vertical strands run from X to O,
// horizontal strands from O to X. X markings play the role of the z
// basepoints and O markings the w basepoints.
struct GridDiagram {
  int size = 0;
  std::vector<int> x_cols;
  std::vector<int> o_cols;
  std::string name;
};

// Optional surface data attached to a grid.
struct LinkMetadata {
  int components = 1;
  std::optional<int> seifert_index_doubled;
};

// A grid diagram known to satisfy both permutation invariants and the
// no-shared-cell invariant. Only validate() can create one.
class ValidatedGrid {
 public:
  int size() const noexcept { return raw_.size; }
  std::span<const int> x_cols() const noexcept { return raw_.x_cols; }
  std::span<const int> o_cols() const noexcept { return raw_.o_cols; }
  const std::string& name() const noexcept { return raw_.name; }
  const GridDiagram& raw() const noexcept { return raw_; }

  // Row of the X (resp. O) marking in column c.
  int x_row_in_col(int c) const { return x_row_[static_cast<std::size_t>(c)]; }
  int o_row_in_col(int c) const { return o_row_[static_cast<std::size_t>(c)]; }

  bool operator==(const ValidatedGrid& other) const {
    return raw_.x_cols == other.raw_.x_cols && raw_.o_cols == other.raw_.o_cols;
  }

 private:
  friend ValidatedGrid validate(GridDiagram raw);
  explicit ValidatedGrid(GridDiagram raw);

  GridDiagram raw_;
  std::vector<int> x_row_;
  std::vector<int> o_row_;
};

// Throws Error{SizeMismatch | NotAPermutation | MarkingCollision}.
ValidatedGrid validate(GridDiagram raw);

// Number of closed strand cycles.
int link_components(const ValidatedGrid& g);

// Reflection across a vertical axis; presents the mirror link.
ValidatedGrid mirror(const ValidatedGrid& g);

// Connected sum splicing the strand through the top row of g1 with the strand
// through the bottom row of g2. Size n1 + n2 - 1.
ValidatedGrid connected_sum(const ValidatedGrid& g1, const ValidatedGrid& g2);

// Grid file I/O. Format:
//   n
//   X: c0 c1 ... c(n-1)
//   O: c0 c1 ... c(n-1)
// with '#' comment lines allowed anywhere. Anything else is a ParseError.
ValidatedGrid parse_grid(const std::string& text, std::string name = {});
ValidatedGrid load_grid(const std::filesystem::path& path);
std::string format_grid(const ValidatedGrid& g, const std::vector<std::string>& comments = {});

}  // namespace hfk
