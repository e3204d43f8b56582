#include "hfk/homology.hpp"

#include <algorithm>
#include <set>

#include "hfk/detail/parallel.hpp"
#include "hfk/error.hpp"

namespace hfk {

void BigradedRanks::add(int maslov2, int alex2, std::size_t rank) {
  if (rank == 0) return;
  ranks_[{maslov2, alex2}] += rank;
}

std::size_t BigradedRanks::at(int maslov2, int alex2) const {
  const auto it = ranks_.find({maslov2, alex2});
  return it == ranks_.end() ? 0 : it->second;
}

std::size_t BigradedRanks::total() const {
  std::size_t t = 0;
  for (const auto& [k, r] : ranks_) t += r;
  return t;
}

std::optional<int> BigradedRanks::min_alex2() const {
  std::optional<int> out;
  for (const auto& [k, r] : ranks_) out = out ? std::min(*out, k.second) : k.second;
  return out;
}

std::optional<int> BigradedRanks::max_alex2() const {
  std::optional<int> out;
  for (const auto& [k, r] : ranks_) out = out ? std::max(*out, k.second) : k.second;
  return out;
}

BigradedRanks BigradedRanks::level(int alex2) const {
  BigradedRanks out;
  for (const auto& [k, r] : ranks_)
    if (k.second == alex2) out.add(k.first, k.second, r);
  return out;
}

BigradedRanks level_homology(const LevelComplex& level) {
  const auto& gens = level.gens;
  const auto& d = level.boundary;
  if (d.cols() != gens.size() || d.rows() != gens.size())
    throw Error(ErrorCode::InconsistentComplex, "boundary shape does not match generator list");

  // Contiguous blocks of equal maslov2 (generators are sorted by maslov2).
  std::map<int, std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0 && gens[k].maslov2 < gens[k - 1].maslov2)
      throw Error(ErrorCode::InconsistentComplex, "generators not sorted by Maslov grading");
    auto [it, inserted] = blocks.try_emplace(gens[k].maslov2, k, k + 1);
    if (!inserted) it->second.second = k + 1;
  }

  SparseGF2Matrix::Column acc;
  SparseGF2Matrix::Column scratch;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    acc.clear();
    for (auto row : d.column(k)) {
      if (gens[row].maslov2 != gens[k].maslov2 - 2)
        throw Error(ErrorCode::InconsistentComplex, "boundary entry does not lower Maslov grading by one");
      xor_into(acc, d.column(row), scratch);
    }
    if (!acc.empty()) throw Error(ErrorCode::InconsistentComplex, "d o d != 0");
  }

  std::map<int, std::size_t> ranks;
  for (const auto& [m, range] : blocks) {
    const auto below = blocks.find(m - 2);
    const std::size_t row_offset = below == blocks.end() ? 0 : below->second.first;
    const std::size_t row_count = below == blocks.end() ? 0 : below->second.second - below->second.first;
    SparseGF2Matrix block(row_count, range.second - range.first);
    for (std::size_t k = range.first; k < range.second; ++k) {
      SparseGF2Matrix::Column col;
      col.reserve(d.column(k).size());
      for (auto row : d.column(k)) col.push_back(static_cast<SparseGF2Matrix::Index>(row - row_offset));
      block.set_column(k - range.first, std::move(col));
    }
    ranks[m] = rank(block);
  }

  BigradedRanks out;
  for (const auto& [m, range] : blocks) {
    const std::size_t count = range.second - range.first;
    const auto above = ranks.find(m + 2);
    const std::size_t image_in = above == ranks.end() ? 0 : above->second;
    out.add(m, level.level_alex2, count - ranks[m] - image_in);
  }
  return out;
}

BigradedRanks homology_ranks(std::span<const LevelComplex> levels, const EngineOptions& opts) {
  std::vector<BigradedRanks> parts(levels.size());
  detail::parallel_for(levels.size(), opts.threads, [&](std::size_t i) { parts[i] = level_homology(levels[i]); });
  BigradedRanks out;
  for (const auto& part : parts)
    for (const auto& [k, r] : part.entries()) out.add(k.first, k.second, r);
  return out;
}

BigradedRanks deflate_to_hat(const BigradedRanks& tilde, int factors) {
  if (factors < 0) throw Error(ErrorCode::InvalidArgument, "negative factor count");
  // Keyed (alex2, maslov2) so iteration from the top Alexander level is a
  // reverse walk.
  std::map<std::pair<int, int>, long long> current;
  for (const auto& [k, r] : tilde.entries()) current[{k.second, k.first}] = static_cast<long long>(r);
  for (int f = 0; f < factors; ++f) {
    std::map<std::pair<int, int>, long long> quotient;
    while (!current.empty()) {
      const auto top = std::prev(current.end());
      const auto [key, c] = *top;
      current.erase(top);
      if (c == 0) continue;
      if (c < 0) throw Error(ErrorCode::NotDivisible, "tilde ranks are not a multiple of (1 + m t)");
      quotient[key] = c;
      current[{key.first - 2, key.second - 2}] -= c;
    }
    current = std::move(quotient);
  }
  BigradedRanks out;
  for (const auto& [k, c] : current) out.add(k.second, k.first, static_cast<std::size_t>(c));
  return out;
}

BigradedRanks inflate(const BigradedRanks& hat, int factors) {
  if (factors < 0) throw Error(ErrorCode::InvalidArgument, "negative factor count");
  BigradedRanks current = hat;
  for (int f = 0; f < factors; ++f) {
    BigradedRanks next;
    for (const auto& [k, r] : current.entries()) {
      next.add(k.first, k.second, r);
      next.add(k.first - 2, k.second - 2, r);
    }
    current = std::move(next);
  }
  return current;
}

namespace {

using Index = SparseGF2Matrix::Index;

struct DegreeIndex {
  // Global indices of generators per maslov2, in filtration order.
  std::map<int, std::vector<std::size_t>> members;
  // Position of each generator inside its maslov2 list.
  std::vector<Index> local;
};

DegreeIndex index_by_degree(const FilteredComplex& fc) {
  DegreeIndex di;
  di.local.resize(fc.size());
  for (std::size_t k = 0; k < fc.size(); ++k) {
    auto& list = di.members[fc.gens()[k].maslov2];
    di.local[k] = static_cast<Index>(list.size());
    list.push_back(k);
  }
  return di;
}

const std::vector<std::size_t>& members_at(const DegreeIndex& di, int maslov2) {
  static const std::vector<std::size_t> none;
  const auto it = di.members.find(maslov2);
  return it == di.members.end() ? none : it->second;
}

SparseGF2Matrix::Column local_boundary(const FilteredComplex& fc, const DegreeIndex& di, std::size_t k) {
  SparseGF2Matrix::Column col;
  const int target = fc.gens()[k].maslov2 - 2;
  for (auto row : fc.boundary(k)) {
    if (fc.gens()[row].maslov2 != target)
      throw Error(ErrorCode::InconsistentComplex, "filtered boundary does not lower Maslov grading by one");
    col.push_back(di.local[row]);
  }
  std::sort(col.begin(), col.end());
  return col;
}

// Pivot pairing of the degree-(m+2) columns into degree m rows: for each row
// in degree m, the global index of the column that kills it, if any.
std::vector<std::optional<std::size_t>> killers_into(const FilteredComplex& fc, const DegreeIndex& di, int m) {
  const auto& rows = members_at(di, m);
  const auto& cols = members_at(di, m + 2);
  std::vector<std::optional<std::size_t>> killer(rows.size());
  ColumnReducer reducer(rows.size());
  for (std::size_t k : cols) {
    if (const auto low = reducer.add_column(local_boundary(fc, di, k))) killer[*low] = k;
  }
  return killer;
}

// Whether each of the first `count` degree-m generators is a cycle after
// reduction against earlier columns (a "creator").
std::vector<bool> creators_at(const FilteredComplex& fc, const DegreeIndex& di, int m, std::size_t count) {
  const auto& cols = members_at(di, m);
  ColumnReducer reducer(members_at(di, m - 2).size());
  std::vector<bool> creator(count, false);
  for (std::size_t i = 0; i < count; ++i) creator[i] = !reducer.add_column(local_boundary(fc, di, cols[i]));
  return creator;
}

std::size_t sub_prefix(const FilteredComplex& fc, int cutoff) {
  const auto& gens = fc.gens();
  return static_cast<std::size_t>(
      std::partition_point(gens.begin(), gens.end(), [cutoff](const GridGenerator& g) { return g.alex2 <= cutoff; }) -
      gens.begin());
}

}  // namespace

std::size_t induced_map_rank(const TwoStepFiltration& f, const EngineOptions& opts) {
  const FilteredComplex& fc = *f.full;
  const std::size_t s_end = sub_prefix(fc, f.cutoff_alex2);
  const DegreeIndex di = index_by_degree(fc);

  // H(full) is supported in maslov2 in [-2(n-1), 0].
  const int lowest = -2 * (fc.tables().size() - 1);
  std::set<int> degrees;
  for (std::size_t k = 0; k < s_end; ++k) {
    const int m = fc.gens()[k].maslov2;
    if (m <= 0 && m >= lowest) degrees.insert(m);
  }
  const std::vector<int> todo(degrees.begin(), degrees.end());
  std::vector<std::size_t> per_degree(todo.size(), 0);

  detail::parallel_for(todo.size(), opts.threads, [&](std::size_t t) {
    const int m = todo[t];
    const auto& members = members_at(di, m);
    const auto in_sub = static_cast<std::size_t>(
        std::partition_point(members.begin(), members.end(), [s_end](std::size_t k) { return k < s_end; }) -
        members.begin());
    const auto creator = creators_at(fc, di, m, in_sub);
    const auto killer = killers_into(fc, di, m);
    std::size_t count = 0;
    for (std::size_t i = 0; i < in_sub; ++i)
      if (creator[i] && !killer[i]) ++count;
    per_degree[t] = count;
  });

  std::size_t total = 0;
  for (auto c : per_degree) total += c;
  return total;
}

TwoStepRanks two_step_ranks(const TwoStepFiltration& f) {
  const FilteredComplex& fc = *f.full;
  const std::size_t s_end = sub_prefix(fc, f.cutoff_alex2);
  const DegreeIndex di = index_by_degree(fc);
  TwoStepRanks out;
  for (const auto& [m, members] : di.members) {
    const auto creator = creators_at(fc, di, m, members.size());
    const auto killer = killers_into(fc, di, m);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!creator[i]) continue;
      const bool in_sub = members[i] < s_end;
      if (!killer[i]) {
        ++out.full_by_maslov2[m];
        if (in_sub) ++out.map_by_maslov2[m];
      }
      if (in_sub && (!killer[i] || *killer[i] >= s_end)) ++out.sub_by_maslov2[m];
    }
  }
  for (const auto& [m, r] : out.sub_by_maslov2) out.sub += r;
  for (const auto& [m, r] : out.full_by_maslov2) out.full += r;
  for (const auto& [m, r] : out.map_by_maslov2) out.map += r;
  return out;
}

}  // namespace hfk
