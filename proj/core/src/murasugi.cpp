#include "hfk/murasugi.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>

#include <json.hpp>

#include "hfk/error.hpp"

namespace hfk {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr const char* kShiftConvention =
    "[i] raises both gradings by i; P(m) uses doubled Maslov exponents and is multiplied by m^(2(l-1))";

PartResult compute_part(const std::string& role, const CaseGrid& cg, bool with_tau, const EngineOptions& opts) {
  const auto start = Clock::now();
  PartResult r;
  r.role = role;
  r.grid_name = cg.grid.name();
  r.components = link_components(cg.grid);
  r.declared_index2 = cg.meta.seifert_index_doubled;
  r.bottom = bottom_group(cg.grid, opts);
  r.shifted = r.bottom.poincare.shifted(2 * (r.components - 1));
  if (with_tau) r.tau_top_is_g = tau_top_is_g(cg.grid, opts);
  r.seconds = since(start);
  return r;
}

std::vector<PartResult> compute_parts(const MurasugiCase& c, bool with_tau, const EngineOptions& opts) {
  // The three computations are independent; each gets its own share of the
  // worker budget.
  EngineOptions inner = opts;
  inner.threads = 1;
  auto a = std::async(std::launch::async, compute_part, "summand1", std::cref(c.summand1), with_tau, inner);
  auto b = std::async(std::launch::async, compute_part, "summand2", std::cref(c.summand2), with_tau, inner);
  auto s = std::async(std::launch::async, compute_part, "sum", std::cref(c.sum), with_tau, inner);
  std::vector<PartResult> parts;
  parts.push_back(a.get());
  parts.push_back(b.get());
  parts.push_back(s.get());
  return parts;
}

void check_indices(const std::vector<PartResult>& parts) {
  for (const auto& p : parts) {
    if (p.declared_index2 && -p.bottom.alex2_bottom != *p.declared_index2)
      throw Error(ErrorCode::IndexMismatch, p.role + " (" + p.grid_name + "): declared doubled index " +
                                                std::to_string(*p.declared_index2) + " but bottom level is alex2 " +
                                                std::to_string(p.bottom.alex2_bottom));
  }
}

CaseGrid grid_entry(const nlohmann::json& j, const std::filesystem::path& base) {
  if (!j.is_object() || !j.contains("grid")) throw Error(ErrorCode::ParseError, "grid entry needs a \"grid\" path");
  const auto path = base / j.at("grid").get<std::string>();
  CaseGrid cg{load_grid(path), {}, path.string()};
  cg.meta.components = j.value("components", link_components(cg.grid));
  if (j.contains("index2")) cg.meta.seifert_index_doubled = j.at("index2").get<int>();
  return cg;
}

}  // namespace

int surface_index(int boundary_components, int euler_char) {
  if (boundary_components < euler_char)
    throw Error(ErrorCode::NegativeIndex, "|dR| = " + std::to_string(boundary_components) +
                                              " is smaller than chi = " + std::to_string(euler_char));
  return boundary_components - euler_char;
}

int b1_from_index(int index2, int components) { return index2 - components + 1; }

void check_case(const MurasugiCase& c) {
  if (c.polygon_sides_2n < 2 || c.polygon_sides_2n % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "polygon_sides_2n must be a positive even integer");
  for (const CaseGrid* cg : {&c.summand1, &c.summand2, &c.sum}) {
    const int l = link_components(cg->grid);
    if (cg->meta.components != l)
      throw Error(ErrorCode::InvalidArgument, cg->grid.name() + ": declared " + std::to_string(cg->meta.components) +
                                                  " components, grid has " + std::to_string(l));
    if (cg->meta.seifert_index_doubled && *cg->meta.seifert_index_doubled < 0)
      throw Error(ErrorCode::NegativeIndex, cg->grid.name() + ": negative declared index");
  }
}

MurasugiCase connected_sum_case(const CaseGrid& a, const CaseGrid& b) {
  const auto sum = connected_sum(a.grid, b.grid);
  CaseGrid s{sum, {link_components(sum), std::nullopt}, "connected_sum(" + a.origin + ", " + b.origin + ")"};
  if (a.meta.seifert_index_doubled && b.meta.seifert_index_doubled)
    s.meta.seifert_index_doubled = *a.meta.seifert_index_doubled + *b.meta.seifert_index_doubled;
  return {a.grid.name() + "#" + b.grid.name(), a, b, s, 2, std::nullopt, std::nullopt};
}

MurasugiCase load_case(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  try {
    const auto base = path.parent_path();
    MurasugiCase c{j.value("name", path.stem().string()),
                   grid_entry(j.at("summand1"), base),
                   grid_entry(j.at("summand2"), base),
                   grid_entry(j.at("sum"), base),
                   j.value("polygon_sides_2n", 2),
                   std::nullopt,
                   std::nullopt};
    if (j.contains("expect")) {
      const auto& e = j.at("expect");
      if (e.contains("theorem1")) c.expect_theorem1 = e.at("theorem1").get<bool>();
      if (e.contains("theorem2")) c.expect_theorem2 = e.at("theorem2").get<bool>();
    }
    check_case(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

VerificationReport verify_theorem1(const MurasugiCase& c, const EngineOptions& opts) {
  check_case(c);
  const auto start = Clock::now();
  VerificationReport rep;
  rep.case_name = c.name;
  rep.theorem = "theorem1";
  rep.expected = c.expect_theorem1;
  rep.convention = kShiftConvention;
  rep.parts = compute_parts(c, false, opts);
  check_indices(rep.parts);
  rep.product = rep.parts[0].shifted * rep.parts[1].shifted;
  rep.passed = rep.product == rep.parts[2].shifted;
  for (const auto& p : rep.parts) rep.euler.push_back(euler_characteristic(p.shifted));
  rep.euler_multiplicative = rep.euler[0] * rep.euler[1] == rep.euler[2];
  if (!rep.passed)
    rep.notes.push_back("sum has " + rep.parts[2].shifted.to_string() + ", product of summands is " +
                        rep.product.to_string());
  rep.seconds = since(start);
  return rep;
}

VerificationReport verify_theorem2(const MurasugiCase& c, const EngineOptions& opts) {
  check_case(c);
  const auto start = Clock::now();
  VerificationReport rep;
  rep.case_name = c.name;
  rep.theorem = "theorem2";
  rep.expected = c.expect_theorem2;
  rep.convention = "tau_top = g tested as nonvanishing of H(F(-g)) -> HF of the mirror";
  rep.parts = compute_parts(c, true, opts);
  check_indices(rep.parts);
  const bool both = *rep.parts[0].tau_top_is_g && *rep.parts[1].tau_top_is_g;
  rep.passed = both == *rep.parts[2].tau_top_is_g;
  rep.seconds = since(start);
  return rep;
}

CablePrediction cable_top_group_predict(int p, int q, int knot_genus2, const LaurentPoly& knot_top) {
  if (q == 0) throw Error(ErrorCode::UnsupportedQ, "cable slope q must be nonzero");
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "cable p must be positive");
  if (knot_genus2 < 0 || knot_genus2 % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "knot genus must be a non-negative integer");
  CablePrediction out;
  out.alex2 = p * knot_genus2 + (p - 1) * (std::abs(q) - 1);
  if (q > 0) {
    out.poincare = knot_top.with_variable('m');
    out.convention = "q > 0: top group unshifted";
  } else {
    // HFK_*(K_{p,q}, top) = HFK_{* - s}(K, g) with s = (p-1)(2g - q - 1).
    out.poincare = knot_top.with_variable('m').shifted(2 * (p - 1) * (knot_genus2 - q - 1));
    out.convention = "q < 0: Maslov raised by (p-1)(2g-q-1)";
  }
  return out;
}

}  // namespace hfk
