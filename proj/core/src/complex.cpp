#include "hfk/complex.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>

#include "hfk/detail/parallel.hpp"
#include "hfk/error.hpp"

namespace hfk {

namespace {

constexpr int kNibble = 4;

int shift_for(int col) { return kNibble * (kMaxGridSize - 1 - col); }

}  // namespace

PermCode encode_perm(std::span<const int> perm) {
  PermCode code = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    code |= static_cast<PermCode>(perm[i]) << shift_for(static_cast<int>(i));
  return code;
}

std::array<int, kMaxGridSize> decode_perm(PermCode code, int n) {
  std::array<int, kMaxGridSize> p{};
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<int>((code >> shift_for(i)) & 0xF);
  return p;
}

std::vector<int> GridGenerator::perm(int n) const {
  const auto p = decode_perm(code, n);
  return {p.begin(), p.begin() + n};
}

GradingTables::GradingTables(const ValidatedGrid& g)
    : n_(g.size()), components_(link_components(g)) {
  const int n = n_;
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  o_weight_.assign(nn, 0);
  alex_weight_.assign(nn, 0);

  // Pair counts between markings: I(P,P) = #{(p,q): p strictly SW of q}.
  auto self_pairs = [n](std::span<const int> cols) {
    int count = 0;
    for (int r1 = 0; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2)
        if (cols[static_cast<std::size_t>(r1)] < cols[static_cast<std::size_t>(r2)]) ++count;
    return count;
  };
  const int oo = self_pairs(g.o_cols());
  const int xx = self_pairs(g.x_cols());

  // Lattice point (i, r) against marking cell (c, rr) with centre (c+1/2, rr+1/2):
  // marking strictly NE iff c >= i && rr >= r; strictly SW iff c < i && rr < r.
  auto weight = [n](std::span<const int> cols, int i, int r) {
    int w = 0;
    for (int rr = 0; rr < n; ++rr) {
      const int c = cols[static_cast<std::size_t>(rr)];
      if ((c >= i && rr >= r) || (c < i && rr < r)) ++w;
    }
    return w;
  };
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      const int wo = weight(g.o_cols(), i, r);
      const int wx = weight(g.x_cols(), i, r);
      o_weight_[idx(i, r)] = wo;
      alex_weight_[idx(i, r)] = wx - wo;
    }
  }
  maslov_const_ = 2 * (oo + 1);
  alex_const_ = oo - xx - (n - components_);

  suffix_min_.assign(static_cast<std::size_t>(n) + 1, 0);
  suffix_max_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (int r = 0; r < n; ++r) {
      lo = std::min(lo, alex_weight(i, r));
      hi = std::max(hi, alex_weight(i, r));
    }
    suffix_min_[static_cast<std::size_t>(i)] = suffix_min_[static_cast<std::size_t>(i) + 1] + lo;
    suffix_max_[static_cast<std::size_t>(i)] = suffix_max_[static_cast<std::size_t>(i) + 1] + hi;
  }

  // Marking counts for every torus rectangle.
  const std::size_t rects = nn * nn;
  o_count_.assign(rects, 0);
  x_count_.assign(rects, 0);
  auto inside = [n](int left, int width, int bottom, int height, int col, int row) {
    const int dc = (col - left + n) % n;
    const int dr = (row - bottom + n) % n;
    return dc < width && dr < height;
  };
  for (int left = 0; left < n; ++left)
    for (int width = 1; width < n; ++width)
      for (int bottom = 0; bottom < n; ++bottom)
        for (int height = 1; height < n; ++height) {
          int oc = 0;
          int xc = 0;
          for (int row = 0; row < n; ++row) {
            if (inside(left, width, bottom, height, g.o_cols()[static_cast<std::size_t>(row)], row)) ++oc;
            if (inside(left, width, bottom, height, g.x_cols()[static_cast<std::size_t>(row)], row)) ++xc;
          }
          o_count_[rect_idx(left, width, bottom, height)] = static_cast<std::uint8_t>(oc);
          x_count_[rect_idx(left, width, bottom, height)] = static_cast<std::uint8_t>(xc);
        }
}

Gradings GradingTables::gradings(std::span<const int> perm) const {
  int noninv = 0;
  int osum = 0;
  int alex = alex_const_;
  for (int i = 0; i < n_; ++i) {
    const int r = perm[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n_; ++j)
      if (r < perm[static_cast<std::size_t>(j)]) ++noninv;
    osum += o_weight(i, r);
    alex += alex_weight(i, r);
  }
  return {maslov_const_ + 2 * (noninv - osum), alex};
}

Gradings gradings(const ValidatedGrid& g, std::span<const int> perm) {
  const int n = g.size();
  if (perm.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::NotAPermutation, "generator length differs from grid size");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int r : perm) {
    if (r < 0 || r >= n || seen[static_cast<std::size_t>(r)])
      throw Error(ErrorCode::NotAPermutation, "generator is not a permutation");
    seen[static_cast<std::size_t>(r)] = true;
  }
  return GradingTables(g).gradings(perm);
}

std::vector<PermCode> rectangle_targets(const GradingTables& t, PermCode x, RectanglePolicy policy) {
  const int n = t.size();
  const auto p = decode_perm(x, n);
  std::vector<PermCode> out;

  auto markings_ok = [&](int left, int width, int bottom, int height) {
    if (t.o_inside(left, width, bottom, height) != 0) return false;
    return policy == RectanglePolicy::AvoidO || t.x_inside(left, width, bottom, height) == 0;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int pi = p[static_cast<std::size_t>(i)];
      const int pj = p[static_cast<std::size_t>(j)];
      // Rectangle A: lower-left corner (i, pi), upper-right (j, pj), no
      // horizontal wrap. Rectangle B: lower-left (j, pj), upper-right (i, pi),
      // wrapping horizontally. Both go from x to x with columns i, j swapped.
      const int h_a = (pj - pi + n) % n;
      const int h_b = n - h_a;
      bool empty_a = markings_ok(i, j - i, pi, h_a);
      bool empty_b = markings_ok(j, n - (j - i), pj, h_b);
      for (int c = 0; c < n && (empty_a || empty_b); ++c) {
        if (c == i || c == j) continue;
        const int pc = p[static_cast<std::size_t>(c)];
        if (c > i && c < j) {
          const int d = (pc - pi + n) % n;
          if (d > 0 && d < h_a) empty_a = false;
        } else {
          const int d = (pc - pj + n) % n;
          if (d > 0 && d < h_b) empty_b = false;
        }
      }
      if (empty_a != empty_b) {
        const PermCode mask_i = PermCode{0xF} << shift_for(i);
        const PermCode mask_j = PermCode{0xF} << shift_for(j);
        PermCode y = x & ~(mask_i | mask_j);
        y |= static_cast<PermCode>(pj) << shift_for(i);
        y |= static_cast<PermCode>(pi) << shift_for(j);
        out.push_back(y);
      }
    }
  }
  return out;
}

namespace {

// Depth-first search over partial permutations whose Alexander grading can
// still land in [lo, hi]. The sink receives every complete generator.
template <class Sink>
struct WindowSearch {
  const GradingTables& t;
  int lo;
  int hi;
  Sink& sink;

  // column: next column to fill; used: bitmask of rows taken.
  void dfs(int column, std::uint32_t used, int alex, int maslov_half, PermCode code) const {
    const int n = t.size();
    if (column == n) {
      sink(GridGenerator{code, t.maslov_const() + 2 * maslov_half, alex});
      return;
    }
    for (int r = 0; r < n; ++r) {
      if (used & (1u << r)) continue;
      const int a = alex + t.alex_weight(column, r);
      if (a + t.suffix_min(column + 1) > hi || a + t.suffix_max(column + 1) < lo) continue;
      // Earlier columns at lower rows form non-inversions with this point.
      const int noninv = std::popcount(used & ((1u << r) - 1u));
      dfs(column + 1, used | (1u << r), a, maslov_half + noninv - t.o_weight(column, r),
          code | (static_cast<PermCode>(r) << shift_for(column)));
    }
  }

  void from_first_row(int r) const {
    const int a = t.alex_const() + t.alex_weight(0, r);
    if (a + t.suffix_min(1) > hi || a + t.suffix_max(1) < lo) return;
    dfs(1, 1u << r, a, -t.o_weight(0, r), static_cast<PermCode>(r) << shift_for(0));
  }
};

}  // namespace

std::vector<GridGenerator> generators_in_window(const GradingTables& t, int lo, int hi,
                                                const EngineOptions& opts) {
  const int n = t.size();
  std::atomic<std::size_t> found{0};
  std::vector<std::vector<GridGenerator>> parts(static_cast<std::size_t>(n));
  detail::parallel_for(static_cast<std::size_t>(n), opts.threads, [&](std::size_t r0) {
    auto& part = parts[r0];
    auto sink = [&](const GridGenerator& gen) {
      if (found.fetch_add(1, std::memory_order_relaxed) + 1 > opts.max_generators)
        throw Error(ErrorCode::ResourceBound,
                    "more than " + std::to_string(opts.max_generators) + " generators in the requested window");
      part.push_back(gen);
    };
    WindowSearch<decltype(sink)>{t, lo, hi, sink}.from_first_row(static_cast<int>(r0));
  });
  std::vector<GridGenerator> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const GridGenerator& a, const GridGenerator& b) { return a.alex2 < b.alex2; });
  return out;
}

std::map<int, std::int64_t> graded_euler_characteristic(const GradingTables& t, const EngineOptions& opts) {
  const int n = t.size();
  std::vector<std::map<int, std::int64_t>> parts(static_cast<std::size_t>(n));
  detail::parallel_for(static_cast<std::size_t>(n), opts.threads, [&](std::size_t r0) {
    auto& part = parts[r0];
    auto sink = [&](const GridGenerator& gen) { part[gen.alex2] += (gen.maslov2 / 2) % 2 == 0 ? 1 : -1; };
    WindowSearch<decltype(sink)>{t, t.alex2_lower_bound(), t.alex2_upper_bound(), sink}.from_first_row(
        static_cast<int>(r0));
  });
  std::map<int, std::int64_t> out;
  for (const auto& part : parts)
    for (const auto& [a, c] : part) out[a] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<GridGenerator> generators_in_level(const GradingTables& t, int alex2, const EngineOptions& opts) {
  auto gens = generators_in_window(t, alex2, alex2, opts);
  std::sort(gens.begin(), gens.end(), [](const GridGenerator& a, const GridGenerator& b) {
    return a.maslov2 != b.maslov2 ? a.maslov2 < b.maslov2 : a.code < b.code;
  });
  return gens;
}

std::vector<GridGenerator> generators_in_level(const ValidatedGrid& g, int alex2, const EngineOptions& opts) {
  return generators_in_level(GradingTables(g), alex2, opts);
}

LevelComplex build_level_complex(const GradingTables& t, int alex2, std::vector<GridGenerator> gens,
                                 const EngineOptions& opts) {
  std::vector<std::pair<PermCode, std::uint32_t>> lookup;
  lookup.reserve(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) lookup.emplace_back(gens[k].code, static_cast<std::uint32_t>(k));
  std::sort(lookup.begin(), lookup.end());

  SparseGF2Matrix boundary(gens.size(), gens.size());
  std::vector<SparseGF2Matrix::Column> columns(gens.size());
  detail::parallel_for(gens.size(), opts.threads, [&](std::size_t k) {
    for (PermCode y : rectangle_targets(t, gens[k].code, RectanglePolicy::AvoidAllMarkings)) {
      const auto it = std::lower_bound(lookup.begin(), lookup.end(), std::make_pair(y, std::uint32_t{0}));
      if (it == lookup.end() || it->first != y)
        throw Error(ErrorCode::InconsistentComplex, "rectangle leaves its Alexander level");
      columns[k].push_back(it->second);
    }
  });
  for (std::size_t k = 0; k < columns.size(); ++k) boundary.set_column(k, std::move(columns[k]));
  return {t.size(), alex2, std::move(gens), std::move(boundary)};
}

LevelComplex boundary_at_level(const GradingTables& t, int alex2, const EngineOptions& opts) {
  return build_level_complex(t, alex2, generators_in_level(t, alex2, opts), opts);
}

LevelComplex boundary_at_level(const ValidatedGrid& g, int alex2, const EngineOptions& opts) {
  return boundary_at_level(GradingTables(g), alex2, opts);
}

std::vector<LevelComplex> full_tilde_complex(const ValidatedGrid& g, const EngineOptions& opts) {
  const GradingTables t(g);
  auto all = generators_in_window(t, t.alex2_lower_bound(), t.alex2_upper_bound(), opts);
  std::vector<LevelComplex> levels;
  for (std::size_t begin = 0; begin < all.size();) {
    std::size_t end = begin;
    while (end < all.size() && all[end].alex2 == all[begin].alex2) ++end;
    std::vector<GridGenerator> level(all.begin() + static_cast<std::ptrdiff_t>(begin),
                                     all.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(level.begin(), level.end(), [](const GridGenerator& a, const GridGenerator& b) {
      return a.maslov2 != b.maslov2 ? a.maslov2 < b.maslov2 : a.code < b.code;
    });
    const int alex2 = all[begin].alex2;
    levels.push_back(build_level_complex(t, alex2, std::move(level), opts));
    begin = end;
  }
  return levels;
}

FilteredComplex::FilteredComplex(const ValidatedGrid& g, const EngineOptions& opts) : tables_(g) {
  gens_ = generators_in_window(tables_, tables_.alex2_lower_bound(), tables_.alex2_upper_bound(), opts);
  std::sort(gens_.begin(), gens_.end(), [](const GridGenerator& a, const GridGenerator& b) {
    return a.alex2 != b.alex2 ? a.alex2 < b.alex2 : a.code < b.code;
  });
  lookup_.reserve(gens_.size());
  for (std::size_t k = 0; k < gens_.size(); ++k) lookup_.emplace_back(gens_[k].code, static_cast<std::uint32_t>(k));
  std::sort(lookup_.begin(), lookup_.end());
}

std::size_t FilteredComplex::index_of(PermCode code) const {
  const auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(code, std::uint32_t{0}));
  if (it == lookup_.end() || it->first != code)
    throw Error(ErrorCode::InvalidArgument, "generator not in complex");
  return it->second;
}

SparseGF2Matrix::Column FilteredComplex::boundary(std::size_t k) const {
  SparseGF2Matrix::Column col;
  for (PermCode y : rectangle_targets(tables_, gens_[k].code, RectanglePolicy::AvoidO))
    col.push_back(static_cast<SparseGF2Matrix::Index>(index_of(y)));
  std::sort(col.begin(), col.end());
  return col;
}

}  // namespace hfk
