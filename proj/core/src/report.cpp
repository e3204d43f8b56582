#include "hfk/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "hfk/error.hpp"

namespace hfk {

namespace {

std::string half(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = c;
  return {{"variable", std::string(1, p.variable())}, {"terms", terms}, {"text", p.to_string()}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  const auto var = j.at("variable").get<std::string>();
  if (var.size() != 1) throw Error(ErrorCode::ParseError, "polynomial variable must be one character");
  LaurentPoly p(var[0]);
  for (const auto& [k, v] : j.at("terms").items()) p.add_term(std::stoi(k), v.get<LaurentPoly::Coeff>());
  return p;
}

nlohmann::json to_json(const BigradedRanks& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, rank] : r.entries()) out.push_back({{"maslov2", k.first}, {"alex2", k.second}, {"rank", rank}});
  return out;
}

BigradedRanks ranks_from_json(const nlohmann::json& j) {
  BigradedRanks r;
  for (const auto& e : j) r.add(e.at("maslov2").get<int>(), e.at("alex2").get<int>(), e.at("rank").get<std::size_t>());
  return r;
}

nlohmann::json to_json(const ExtremalGroup& e) {
  return {{"alex2_bottom", e.alex2_bottom}, {"poincare", to_json(e.poincare)}};
}

ExtremalGroup extremal_from_json(const nlohmann::json& j) {
  return {j.at("alex2_bottom").get<int>(), laurent_from_json(j.at("poincare"))};
}

nlohmann::json to_json(const TopGroup& e) { return {{"alex2_top", e.alex2_top}, {"poincare", to_json(e.poincare)}}; }

TopGroup top_from_json(const nlohmann::json& j) {
  return {j.at("alex2_top").get<int>(), laurent_from_json(j.at("poincare"))};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : r.parts) {
    nlohmann::json jp{{"role", p.role},
                      {"grid", p.grid_name},
                      {"components", p.components},
                      {"bottom", to_json(p.bottom)},
                      {"shifted", to_json(p.shifted)},
                      {"seconds", p.seconds}};
    jp["declared_index2"] = p.declared_index2 ? nlohmann::json(*p.declared_index2) : nlohmann::json(nullptr);
    jp["tau_top_is_g"] = p.tau_top_is_g ? nlohmann::json(*p.tau_top_is_g) : nlohmann::json(nullptr);
    parts.push_back(jp);
  }
  nlohmann::json j{{"case", r.case_name},
                   {"theorem", r.theorem},
                   {"parts", parts},
                   {"product", to_json(r.product)},
                   {"euler", r.euler},
                   {"euler_multiplicative", r.euler_multiplicative},
                   {"passed", r.passed},
                   {"convention", r.convention},
                   {"notes", r.notes},
                   {"seconds", r.seconds}};
  j["expected"] = r.expected ? nlohmann::json(*r.expected) : nlohmann::json(nullptr);
  return j;
}

VerificationReport verification_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.case_name = j.at("case").get<std::string>();
  r.theorem = j.at("theorem").get<std::string>();
  for (const auto& jp : j.at("parts")) {
    PartResult p;
    p.role = jp.at("role").get<std::string>();
    p.grid_name = jp.at("grid").get<std::string>();
    p.components = jp.at("components").get<int>();
    p.bottom = extremal_from_json(jp.at("bottom"));
    p.shifted = laurent_from_json(jp.at("shifted"));
    p.seconds = jp.at("seconds").get<double>();
    if (!jp.at("declared_index2").is_null()) p.declared_index2 = jp.at("declared_index2").get<int>();
    if (!jp.at("tau_top_is_g").is_null()) p.tau_top_is_g = jp.at("tau_top_is_g").get<bool>();
    r.parts.push_back(std::move(p));
  }
  r.product = laurent_from_json(j.at("product"));
  r.euler = j.at("euler").get<std::vector<std::int64_t>>();
  r.euler_multiplicative = j.at("euler_multiplicative").get<bool>();
  r.passed = j.at("passed").get<bool>();
  if (!j.at("expected").is_null()) r.expected = j.at("expected").get<bool>();
  r.convention = j.at("convention").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.seconds = j.at("seconds").get<double>();
  return r;
}

nlohmann::json to_json(const CablePrediction& c) {
  return {{"alex2", c.alex2}, {"poincare", to_json(c.poincare)}, {"convention", c.convention}};
}

nlohmann::json to_json(const PosRationalFunction& f) {
  const auto [n, d] = f.at_one();
  return {{"numerator", to_json(f.numerator())},
          {"denominator", to_json(f.denominator())},
          {"text", f.to_string()},
          {"at_one", {n, d}}};
}

InputDigest digest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return {path.string(), buf};
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& d : r.inputs) inputs.push_back({{"path", d.path}, {"fnv1a64", d.fnv1a64}});
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [a, c] : r.generator_counts) counts[std::to_string(a)] = c;
  return {{"schema", r.schema},          {"version", r.version},
          {"command", r.command},        {"inputs", inputs},
          {"results", r.results},        {"wall_seconds", r.wall_seconds},
          {"generator_counts", counts}};
}

RunReport run_report_from_json(const nlohmann::json& j) {
  RunReport r;
  r.schema = j.at("schema").get<int>();
  if (r.schema != kReportSchema) throw Error(ErrorCode::ParseError, "unsupported report schema");
  r.version = j.at("version").get<std::string>();
  r.command = j.at("command").get<std::vector<std::string>>();
  for (const auto& d : j.at("inputs")) r.inputs.push_back({d.at("path").get<std::string>(), d.at("fnv1a64").get<std::string>()});
  r.results = j.at("results");
  r.wall_seconds = j.at("wall_seconds").get<double>();
  for (const auto& [k, v] : j.at("generator_counts").items()) r.generator_counts[std::stoi(k)] = v.get<std::size_t>();
  return r;
}

std::string format_rank_table(const BigradedRanks& r) {
  std::set<int> ms;
  std::set<int, std::greater<>> as;
  for (const auto& [k, rank] : r.entries()) {
    ms.insert(k.first);
    as.insert(k.second);
  }
  std::ostringstream out;
  const int w = 6;
  out << std::setw(w) << "A\\M";
  for (int m : ms) out << std::setw(w) << half(m);
  out << '\n';
  for (int a : as) {
    out << std::setw(w) << half(a);
    for (int m : ms) {
      const auto rank = r.at(m, a);
      out << std::setw(w) << (rank == 0 ? std::string(".") : std::to_string(rank));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hfk
