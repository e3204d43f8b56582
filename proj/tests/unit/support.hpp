#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "hfk/grid.hpp"
#include "oracle.hpp"

#ifndef HFK_TEST_CORPUS
#error "HFK_TEST_CORPUS must point at the corpus directory"
#endif

namespace testing {

inline std::filesystem::path corpus(const std::string& rel) { return std::filesystem::path(HFK_TEST_CORPUS) / rel; }

inline hfk::ValidatedGrid load(const std::string& rel) { return hfk::load_grid(corpus(rel)); }

inline oracle::Grid to_oracle(const hfk::ValidatedGrid& g) {
  return {g.size(), {g.x_cols().begin(), g.x_cols().end()}, {g.o_cols().begin(), g.o_cols().end()}};
}

inline hfk::ValidatedGrid unknot(int n) {
  hfk::GridDiagram d{n, {}, {}, "unknot" + std::to_string(n)};
  for (int r = 0; r < n; ++r) {
    d.o_cols.push_back(r);
    d.x_cols.push_back((r + 1) % n);
  }
  return hfk::validate(d);
}

// A uniformly random valid grid of size n (rejection sampling on X = O
// collisions).
inline hfk::ValidatedGrid random_grid(int n, std::mt19937& rng) {
  for (;;) {
    hfk::GridDiagram d{n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n)), "random"};
    for (int i = 0; i < n; ++i) d.x_cols[static_cast<std::size_t>(i)] = d.o_cols[static_cast<std::size_t>(i)] = i;
    std::shuffle(d.x_cols.begin(), d.x_cols.end(), rng);
    std::shuffle(d.o_cols.begin(), d.o_cols.end(), rng);
    bool collide = false;
    for (int r = 0; r < n; ++r) collide |= d.x_cols[static_cast<std::size_t>(r)] == d.o_cols[static_cast<std::size_t>(r)];
    if (!collide) return hfk::validate(d);
  }
}

}  // namespace testing
