#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfk/homology.hpp"
#include "hfk/invariants.hpp"
#include "hfk/laurent.hpp"
#include "hfk/ledger.hpp"
#include "hfk/murasugi.hpp"

namespace hfk {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Polynomials serialize as {"exponent": coefficient} plus the variable.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

// List of {"maslov2", "alex2", "rank"} in key order.
nlohmann::json to_json(const BigradedRanks& r);
BigradedRanks ranks_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtremalGroup& e);
ExtremalGroup extremal_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TopGroup& e);
TopGroup top_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CablePrediction& c);
nlohmann::json to_json(const PosRationalFunction& f);

struct InputDigest {
  std::string path;
  std::string fnv1a64;  // hex
  bool operator==(const InputDigest&) const = default;
};

InputDigest digest_file(const std::filesystem::path& path);

struct RunReport {
  int schema = kReportSchema;
  std::string version = kToolVersion;
  std::vector<std::string> command;
  std::vector<InputDigest> inputs;
  nlohmann::json results = nlohmann::json::object();
  double wall_seconds = 0;
  std::map<int, std::size_t> generator_counts;

  bool operator==(const RunReport&) const = default;
};

nlohmann::json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

// Aligned text table of ranks, one row per Alexander grading (descending) and
// one column per Maslov grading, in undoubled units when they are integral.
std::string format_rank_table(const BigradedRanks& r);

}  // namespace hfk
