#include "hfk/snapshot.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "hfk/error.hpp"

namespace hfk {

namespace {

constexpr std::array<char, 8> kMagic{'H', 'F', 'K', 'L', 'E', 'V', 'E', 'L'};

template <class T>
void put(std::ostream& out, T value) {
  using U = std::make_unsigned_t<T>;
  auto u = static_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.put(static_cast<char>(u & 0xFFu));
    u = static_cast<U>(u >> 8);
  }
}

template <class T>
T get(std::istream& in) {
  using U = std::make_unsigned_t<T>;
  U u = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw Error(ErrorCode::SnapshotFormat, "truncated snapshot");
    u = static_cast<U>(u | (static_cast<U>(static_cast<unsigned char>(c)) << (8 * i)));
  }
  return static_cast<T>(u);
}

}  // namespace

void write_snapshot(std::ostream& out, const LevelComplex& level) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kSnapshotVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(level.grid_size));
  put<std::int32_t>(out, level.level_alex2);
  put<std::uint64_t>(out, level.gens.size());
  for (const auto& gen : level.gens) {
    const auto p = decode_perm(gen.code, level.grid_size);
    for (int i = 0; i < level.grid_size; ++i) out.put(static_cast<char>(p[static_cast<std::size_t>(i)]));
    put<std::int32_t>(out, gen.maslov2);
    put<std::int32_t>(out, gen.alex2);
  }
  const auto entries = level.boundary.entries();
  put<std::uint64_t>(out, entries.size());
  for (const auto& [row, col] : entries) {
    put<std::uint32_t>(out, row);
    put<std::uint32_t>(out, col);
    put<std::uint8_t>(out, 1);
  }
}

LevelComplex read_snapshot(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != static_cast<std::streamsize>(magic.size()) || magic != kMagic)
    throw Error(ErrorCode::SnapshotFormat, "bad magic");
  const auto version = get<std::uint32_t>(in);
  if (version != kSnapshotVersion)
    throw Error(ErrorCode::SnapshotFormat, "unsupported version " + std::to_string(version));
  LevelComplex level;
  level.grid_size = static_cast<int>(get<std::uint32_t>(in));
  if (level.grid_size < 1 || level.grid_size > kMaxGridSize)
    throw Error(ErrorCode::SnapshotFormat, "grid size out of range");
  level.level_alex2 = get<std::int32_t>(in);
  const auto count = get<std::uint64_t>(in);
  level.gens.reserve(count);
  std::vector<int> perm(static_cast<std::size_t>(level.grid_size));
  for (std::uint64_t k = 0; k < count; ++k) {
    for (auto& r : perm) {
      r = static_cast<int>(get<std::uint8_t>(in));
      if (r >= level.grid_size) throw Error(ErrorCode::SnapshotFormat, "perm entry out of range");
    }
    GridGenerator gen;
    gen.code = encode_perm(perm);
    gen.maslov2 = get<std::int32_t>(in);
    gen.alex2 = get<std::int32_t>(in);
    level.gens.push_back(gen);
  }
  const auto nnz = get<std::uint64_t>(in);
  std::vector<std::pair<SparseGF2Matrix::Index, SparseGF2Matrix::Index>> entries;
  entries.reserve(nnz);
  for (std::uint64_t k = 0; k < nnz; ++k) {
    const auto row = get<std::uint32_t>(in);
    const auto col = get<std::uint32_t>(in);
    const auto value = get<std::uint8_t>(in);
    if (value != 1) throw Error(ErrorCode::SnapshotFormat, "triplet value must be 1");
    if (row >= count || col >= count) throw Error(ErrorCode::SnapshotFormat, "triplet out of range");
    entries.emplace_back(row, col);
  }
  level.boundary = SparseGF2Matrix::from_entries(count, count, entries);
  return level;
}

void save_snapshot(const std::filesystem::path& path, const LevelComplex& level) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FileNotFound, path.string());
  write_snapshot(out, level);
}

LevelComplex load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  return read_snapshot(in);
}

}  // namespace hfk
