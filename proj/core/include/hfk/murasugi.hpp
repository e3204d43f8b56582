#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hfk/grid.hpp"
#include "hfk/invariants.hpp"
#include "hfk/laurent.hpp"

namespace hfk {

// Doubled index |dR| - chi(R). Throws NegativeIndex if |dR| < chi(R).
int surface_index(int boundary_components, int euler_char);

// Doubled first Betti number of a minimal surface: b1 = 2i - |dR| + 1.
int b1_from_index(int index2, int components);

struct CaseGrid {
  ValidatedGrid grid;
  LinkMetadata meta;
  // Where the grid came from: a file path or a construction.
  std::string origin;
};

struct MurasugiCase {
  std::string name;
  CaseGrid summand1;
  CaseGrid summand2;
  CaseGrid sum;
  int polygon_sides_2n = 2;
  std::optional<bool> expect_theorem1;
  std::optional<bool> expect_theorem2;
};

// Throws InvalidArgument when 2n is odd or < 2, or when declared component
// counts disagree with the grids.
void check_case(const MurasugiCase& c);

// Connected sum case (2n = 2) built from two grids.
MurasugiCase connected_sum_case(const CaseGrid& a, const CaseGrid& b);

// JSON case file: {"name", "polygon_sides_2n", "summand1", "summand2", "sum",
// "expect": {"theorem1", "theorem2"}} where each grid entry is
// {"grid": path, "components": l, "index2": 2i}. Paths are resolved relative
// to the case file.
MurasugiCase load_case(const std::filesystem::path& path);

struct PartResult {
  std::string role;  // summand1, summand2 or sum
  std::string grid_name;
  int components = 1;
  std::optional<int> declared_index2;
  ExtremalGroup bottom;
  // bottom.poincare * m^(2(l-1)).
  LaurentPoly shifted{'m'};
  std::optional<bool> tau_top_is_g;
  double seconds = 0;
};

struct VerificationReport {
  std::string case_name;
  std::string theorem;  // "theorem1" or "theorem2"
  std::vector<PartResult> parts;
  // Tensor-product check: product of the summands' shifted polynomials.
  LaurentPoly product{'m'};
  // Tensor-product check: signed Euler characteristics of the shifted groups.
  std::vector<std::int64_t> euler;
  bool euler_multiplicative = false;
  bool passed = false;
  std::optional<bool> expected;
  std::string convention;
  std::vector<std::string> notes;
  double seconds = 0;
};

// Throws IndexMismatch when a computed bottom level contradicts a declared
// index.
VerificationReport verify_theorem1(const MurasugiCase& c, const EngineOptions& opts = {});
VerificationReport verify_theorem2(const MurasugiCase& c, const EngineOptions& opts = {});

struct CablePrediction {
  int alex2 = 0;
  LaurentPoly poincare{'m'};
  std::string convention;
};

// Predicted top group of the (p, q) cable of a knot with doubled genus
// knot_genus2 and top group knot_top (doubled Maslov exponents). Throws
// UnsupportedQ for q = 0 and InvalidArgument for p < 1.
CablePrediction cable_top_group_predict(int p, int q, int knot_genus2, const LaurentPoly& knot_top);

}  // namespace hfk
