#pragma once

#include <filesystem>
#include <iosfwd>

#include "hfk/complex.hpp"

namespace hfk {

// Binary snapshot of a LevelComplex, little-endian throughout:
//
//   offset  size  field
//   0       8     magic "HFKLEVEL"
//   8       4     u32 format version (1)
//   12      4     u32 grid size n
//   16      4     i32 level_alex2
//   20      8     u64 generator count G
//   28      G*(n+8)  per generator: n bytes of perm, i32 maslov2, i32 alex2
//   ...     8     u64 entry count E
//   ...     E*9   triplets: u32 row, u32 col, u8 value (always 1)
//
// Readers reject other magics, versions, or truncated input with
// SnapshotFormat.
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(std::ostream& out, const LevelComplex& level);
LevelComplex read_snapshot(std::istream& in);

void save_snapshot(const std::filesystem::path& path, const LevelComplex& level);
LevelComplex load_snapshot(const std::filesystem::path& path);

}  // namespace hfk
