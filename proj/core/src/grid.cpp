#include "hfk/grid.hpp"

#include <fstream>
#include <sstream>

#include "hfk/error.hpp"

namespace hfk {

namespace {

std::vector<int> inverse_rows(const std::vector<int>& cols) {
  std::vector<int> rows(cols.size(), -1);
  for (std::size_t r = 0; r < cols.size(); ++r) rows[static_cast<std::size_t>(cols[r])] = static_cast<int>(r);
  return rows;
}

void check_permutation(const std::vector<int>& cols, int n, const char* which) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int c : cols) {
    if (c < 0 || c >= n)
      throw Error(ErrorCode::NotAPermutation,
                  std::string(which) + " column " + std::to_string(c) + " out of range");
    if (seen[static_cast<std::size_t>(c)])
      throw Error(ErrorCode::NotAPermutation,
                  std::string(which) + " column " + std::to_string(c) + " repeated");
    seen[static_cast<std::size_t>(c)] = true;
  }
}

std::vector<int> rotate_cols(std::span<const int> cols, int n, int shift) {
  std::vector<int> out(cols.begin(), cols.end());
  for (int& c : out) c = ((c + shift) % n + n) % n;
  return out;
}

}  // namespace

ValidatedGrid::ValidatedGrid(GridDiagram raw)
    : raw_(std::move(raw)), x_row_(inverse_rows(raw_.x_cols)), o_row_(inverse_rows(raw_.o_cols)) {}

ValidatedGrid validate(GridDiagram raw) {
  const int n = raw.size;
  if (n < 1 || n > kMaxGridSize)
    throw Error(ErrorCode::SizeMismatch, "grid size " + std::to_string(n) + " outside [1, 16]");
  if (raw.x_cols.size() != static_cast<std::size_t>(n) || raw.o_cols.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::SizeMismatch, "marking sequences must have length " + std::to_string(n));
  check_permutation(raw.x_cols, n, "X");
  check_permutation(raw.o_cols, n, "O");
  for (int r = 0; r < n; ++r) {
    if (raw.x_cols[static_cast<std::size_t>(r)] == raw.o_cols[static_cast<std::size_t>(r)])
      throw Error(ErrorCode::MarkingCollision, "row " + std::to_string(r) + " holds both markings");
  }
  return ValidatedGrid(std::move(raw));
}

int link_components(const ValidatedGrid& g) {
  // Row r continues through the O in column o_cols[r] down/up to the X of that
  // column, which sits in row x_row_in_col(o_cols[r]).
  const int n = g.size();
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int r = start;
    while (!visited[static_cast<std::size_t>(r)]) {
      visited[static_cast<std::size_t>(r)] = true;
      r = g.x_row_in_col(g.o_cols()[static_cast<std::size_t>(r)]);
    }
  }
  return cycles;
}

ValidatedGrid mirror(const ValidatedGrid& g) {
  const int n = g.size();
  GridDiagram out{n, {}, {}, g.name().empty() ? std::string{} : "m(" + g.name() + ")"};
  for (int r = 0; r < n; ++r) {
    out.x_cols.push_back(n - 1 - g.x_cols()[static_cast<std::size_t>(r)]);
    out.o_cols.push_back(n - 1 - g.o_cols()[static_cast<std::size_t>(r)]);
  }
  return validate(std::move(out));
}

ValidatedGrid connected_sum(const ValidatedGrid& g1, const ValidatedGrid& g2) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  const int n = n1 + n2 - 1;
  if (n > kMaxGridSize)
    throw Error(ErrorCode::SizeMismatch, "connected sum would exceed the maximum grid size");

  // Cyclic column rotations are torus isotopies. Afterwards the top-row O of g1
  // sits in the last column of g1 and the bottom-row X of g2 in its first
  // column, so the two cells are diagonal neighbours in the block sum.
  const auto x1 = rotate_cols(g1.x_cols(), n1, n1 - 1 - g1.o_cols()[static_cast<std::size_t>(n1 - 1)]);
  const auto o1 = rotate_cols(g1.o_cols(), n1, n1 - 1 - g1.o_cols()[static_cast<std::size_t>(n1 - 1)]);
  const auto x2 = rotate_cols(g2.x_cols(), n2, -g2.x_cols()[0]);
  const auto o2 = rotate_cols(g2.o_cols(), n2, -g2.x_cols()[0]);

  GridDiagram out;
  out.size = n;
  if (!g1.name().empty() && !g2.name().empty()) out.name = g1.name() + "#" + g2.name();
  for (int r = 0; r + 1 < n1; ++r) {
    out.x_cols.push_back(x1[static_cast<std::size_t>(r)]);
    out.o_cols.push_back(o1[static_cast<std::size_t>(r)]);
  }
  // Merged row: keeps g1's X and g2's O; the merged column is n1 - 1.
  out.x_cols.push_back(x1[static_cast<std::size_t>(n1 - 1)]);
  out.o_cols.push_back(n1 - 1 + o2[0]);
  for (int r = 1; r < n2; ++r) {
    out.x_cols.push_back(n1 - 1 + x2[static_cast<std::size_t>(r)]);
    out.o_cols.push_back(n1 - 1 + o2[static_cast<std::size_t>(r)]);
  }
  return validate(std::move(out));
}

ValidatedGrid parse_grid(const std::string& text, std::string name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    body.push_back(line.substr(first));
  }
  if (body.size() != 3)
    throw Error(ErrorCode::ParseError, "expected exactly three data lines (n, X:, O:), got " +
                                           std::to_string(body.size()));

  auto parse_ints = [](const std::string& s, const char* what) {
    std::istringstream ss(s);
    std::vector<int> values;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw Error(ErrorCode::ParseError, std::string("bad integer '") + tok + "' in " + what);
      values.push_back(v);
    }
    return values;
  };

  const auto size_vals = parse_ints(body[0], "size line");
  if (size_vals.size() != 1) throw Error(ErrorCode::ParseError, "first data line must be the grid size");

  auto marking_line = [&](const std::string& s, const char* tag) {
    if (s.rfind(tag, 0) != 0)
      throw Error(ErrorCode::ParseError, std::string("expected line starting with '") + tag + "'");
    return parse_ints(s.substr(std::string(tag).size()), tag);
  };

  GridDiagram raw;
  raw.size = size_vals[0];
  raw.x_cols = marking_line(body[1], "X:");
  raw.o_cols = marking_line(body[2], "O:");
  raw.name = std::move(name);
  return validate(std::move(raw));
}

ValidatedGrid load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_grid(buf.str(), path.stem().string());
}

std::string format_grid(const ValidatedGrid& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.size() << "\nX:";
  for (int c : g.x_cols()) out << ' ' << c;
  out << "\nO:";
  for (int c : g.o_cols()) out << ' ' << c;
  out << '\n';
  return out.str();
}

}  // namespace hfk
