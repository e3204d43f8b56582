// hfk: command-line front end for the grid homology engine.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 input error,
// 3 resource bound exceeded.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfk/error.hpp"
#include "hfk/grid.hpp"
#include "hfk/homology.hpp"
#include "hfk/invariants.hpp"
#include "hfk/ledger.hpp"
#include "hfk/murasugi.hpp"
#include "hfk/report.hpp"

#ifndef HFK_DEFAULT_CORPUS
#define HFK_DEFAULT_CORPUS "corpus"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

int exit_code_for(hfk::ErrorCode code) {
  switch (code) {
    case hfk::ErrorCode::ResourceBound: return kExitResource;
    case hfk::ErrorCode::IndexMismatch: return kExitFail;
    default: return kExitInput;
  }
}

// Relative paths that do not exist are looked up in the corpus directory
// ($HFK_CORPUS, else the source tree's corpus/).
fs::path resolve(const std::string& arg) {
  const fs::path p(arg);
  if (fs::exists(p) || p.is_absolute()) return p;
  const char* env = std::getenv("HFK_CORPUS");
  const fs::path corpus = env && *env ? fs::path(env) : fs::path(HFK_DEFAULT_CORPUS);
  if (fs::exists(corpus / p)) return corpus / p;
  return p;
}

struct Common {
  unsigned threads = 0;
  std::size_t max_generators = 100'000'000;
  bool json_out = false;

  hfk::EngineOptions engine() const { return {max_generators, threads}; }
};

class Run {
 public:
  explicit Run(std::vector<std::string> command) : start_(std::chrono::steady_clock::now()) {
    report_.command = std::move(command);
  }
  hfk::RunReport& report() { return report_; }
  void input(const fs::path& p) { report_.inputs.push_back(hfk::digest_file(p)); }
  void finish(bool json_out) {
    report_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (json_out) std::cout << hfk::to_json(report_).dump(2) << '\n';
  }

 private:
  std::chrono::steady_clock::time_point start_;
  hfk::RunReport report_;
};

std::string half(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

// --- compute -------------------------------------------------------------

struct ComputeArgs {
  std::string path;
  std::string window = "full";
  bool hat = false;
  bool invariants = false;
};

int cmd_compute(const ComputeArgs& a, const Common& c, Run& run) {
  const auto path = resolve(a.path);
  const auto g = hfk::load_grid(path);
  run.input(path);
  const auto opts = c.engine();
  const int l = hfk::link_components(g);
  auto& res = run.report().results;
  res["grid"] = g.name();
  res["size"] = g.size();
  res["components"] = l;

  if (a.window == "bottom") {
    hfk::LevelScan scan;
    const auto bottom = hfk::bottom_group(g, opts, &scan);
    run.report().generator_counts = scan.generator_counts;
    res["bottom"] = hfk::to_json(bottom);
    res["tilde_bottom_level"] = hfk::to_json(scan.tilde_level);
    if (!c.json_out) {
      std::cout << g.name() << ": bottom Alexander grading " << half(bottom.alex2_bottom) << '\n';
      if (a.hat) {
        hfk::BigradedRanks hat;
        for (const auto& [e, r] : bottom.poincare.terms())
          hat.add(e, bottom.alex2_bottom, static_cast<std::size_t>(r));
        std::cout << hfk::format_rank_table(hat);
      } else {
        std::cout << hfk::format_rank_table(scan.tilde_level);
      }
      std::cout << "Poincare polynomial (doubled Maslov exponents): " << bottom.poincare.to_string() << '\n';
    }
  } else {
    const auto levels = hfk::full_tilde_complex(g, opts);
    for (const auto& lv : levels) run.report().generator_counts[lv.level_alex2] = lv.gens.size();
    const auto tilde = hfk::homology_ranks(levels, opts);
    const auto shown = a.hat ? hfk::deflate_to_hat(tilde, g.size() - l) : tilde;
    res[a.hat ? "hat" : "tilde"] = hfk::to_json(shown);
    res["total_rank"] = shown.total();
    if (!c.json_out) {
      std::cout << g.name() << ": " << (a.hat ? "hat" : "tilde") << " homology, total rank " << shown.total() << '\n';
      std::cout << hfk::format_rank_table(shown);
    }
  }

  if (a.invariants) {
    const int g2 = hfk::genus(g, opts);
    const bool tb = hfk::tau_bot_is_minus_g(g, opts);
    const bool tt = hfk::tau_top_is_g(g, opts);
    res["genus2"] = g2;
    res["tau_bot_is_minus_g"] = tb;
    res["tau_top_is_g"] = tt;
    if (l == 1) res["alexander"] = hfk::to_json(hfk::alexander_polynomial(g, opts));
    if (!c.json_out) {
      std::cout << "doubled index: " << g2 << "\ntau_bot = -g: " << (tb ? "yes" : "no")
                << "\ntau_top = g: " << (tt ? "yes" : "no") << '\n';
      if (l == 1) std::cout << "Alexander polynomial: " << hfk::alexander_polynomial(g, opts).to_string() << '\n';
    }
  }
  return kExitOk;
}

// --- murasugi ------------------------------------------------------------

struct MurasugiArgs {
  std::string case_path;
  std::vector<std::string> connect;
};

void print_report(const hfk::VerificationReport& r) {
  std::cout << r.theorem << " [" << r.case_name << "]: " << (r.passed ? "PASS" : "FAIL");
  if (r.expected) std::cout << " (expected " << (*r.expected ? "pass" : "fail") << ")";
  std::cout << '\n';
  for (const auto& p : r.parts) {
    std::cout << "  " << p.role << " " << p.grid_name << ": l=" << p.components << " bottom A=" << half(p.bottom.alex2_bottom)
              << " P=" << p.bottom.poincare.to_string() << " shifted=" << p.shifted.to_string();
    if (p.tau_top_is_g) std::cout << " tau_top=g:" << (*p.tau_top_is_g ? "yes" : "no");
    std::cout << '\n';
  }
  if (r.theorem == "theorem1") std::cout << "  product of summands: " << r.product.to_string() << '\n';
  for (const auto& n : r.notes) std::cout << "  note: " << n << '\n';
}

int cmd_murasugi(const MurasugiArgs& a, const Common& c, Run& run) {
  hfk::MurasugiCase mc = [&] {
    if (!a.connect.empty()) {
      std::vector<hfk::CaseGrid> parts;
      for (const auto& s : a.connect) {
        const auto p = resolve(s);
        auto g = hfk::load_grid(p);
        run.input(p);
        parts.push_back({g, {hfk::link_components(g), std::nullopt}, p.string()});
      }
      return hfk::connected_sum_case(parts[0], parts[1]);
    }
    if (a.case_path.empty()) throw hfk::Error(hfk::ErrorCode::InvalidArgument, "need a case file or --connect");
    const auto p = resolve(a.case_path);
    auto loaded = hfk::load_case(p);
    run.input(p);
    return loaded;
  }();
  const auto opts = c.engine();
  const auto r1 = hfk::verify_theorem1(mc, opts);
  const auto r2 = hfk::verify_theorem2(mc, opts);
  run.report().results["theorem1"] = hfk::to_json(r1);
  run.report().results["theorem2"] = hfk::to_json(r2);
  if (!c.json_out) {
    print_report(r1);
    print_report(r2);
  }
  return r1.passed && r2.passed ? kExitOk : kExitFail;
}

// --- ledger --------------------------------------------------------------

struct LedgerArgs {
  std::string path = "ledger.json";
  std::string name;
  std::string grid;
  std::string poly;
  int b1 = -1;
  std::string note;
};

hfk::LaurentPoly parse_poly_arg(const std::string& s) {
  // "exp:coeff,exp:coeff", e.g. "0:1,1:1" for 1 + t.
  hfk::LaurentPoly p('t');
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto comma = s.find(',', pos);
    const auto item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw hfk::Error(hfk::ErrorCode::ParseError, "polynomial term '" + item + "'");
    try {
      p.add_term(std::stoi(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw hfk::Error(hfk::ErrorCode::ParseError, "polynomial term '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return p;
}

std::vector<std::string> names_of(const CLI::App* sub) {
  std::vector<std::string> out = sub->remaining();
  if (out.empty()) throw hfk::Error(hfk::ErrorCode::InvalidArgument, "no ledger entries named");
  return out;
}

int cmd_ledger_add(const LedgerArgs& a, const Common& c, Run& run) {
  auto ledger = hfk::Ledger::open(resolve(a.path));
  hfk::LedgerEntry e;
  e.name = a.name;
  e.note = a.note;
  if (!a.grid.empty()) {
    const auto p = resolve(a.grid);
    const auto g = hfk::load_grid(p);
    run.input(p);
    const auto top = hfk::top_group(g, c.engine());
    e.top_poincare = hfk::ledger_polynomial(top.poincare);
    e.b1_min = hfk::b1_from_index(top.alex2_top, hfk::link_components(g));
    e.source = hfk::EntrySource::Computed;
    e.grid = a.grid;
  } else {
    if (a.poly.empty() || a.b1 < 0)
      throw hfk::Error(hfk::ErrorCode::InvalidArgument, "literature entries need --poly and --b1");
    e.top_poincare = parse_poly_arg(a.poly);
    e.b1_min = a.b1;
    e.source = hfk::EntrySource::Literature;
  }
  ledger.add(e);
  ledger.save();
  run.report().results["added"] = {{"name", e.name},
                                   {"top_poincare", hfk::to_json(e.top_poincare)},
                                   {"b1_min", e.b1_min},
                                   {"source", hfk::source_name(e.source)}};
  if (!c.json_out)
    std::cout << "added " << e.name << ": " << e.top_poincare.to_string() << ", b1_min " << e.b1_min << '\n';
  return kExitOk;
}

int cmd_ledger_p(const LedgerArgs& a, const CLI::App* sub, const Common& c, Run& run) {
  const auto ledger = hfk::Ledger::open(resolve(a.path));
  std::vector<hfk::SignedEntry> signed_entries;
  for (const auto& n : names_of(sub)) {
    const bool neg = n.size() > 1 && n[0] == '-';
    signed_entries.emplace_back(&ledger.get(neg ? n.substr(1) : n), neg ? -1 : 1);
  }
  const auto f = hfk::p_image(signed_entries);
  run.report().results["p_image"] = hfk::to_json(f);
  if (!c.json_out) std::cout << f.to_string() << '\n';
  return kExitOk;
}

int cmd_ledger_indep(const LedgerArgs& a, const CLI::App* sub, const Common& c, Run& run) {
  const auto ledger = hfk::Ledger::open(resolve(a.path));
  std::vector<const hfk::LedgerEntry*> es;
  for (const auto& n : names_of(sub)) es.push_back(&ledger.get(n));
  const bool indep = hfk::independent_by_coprimality(es);
  run.report().results["independent"] = indep;
  if (!c.json_out) std::cout << (indep ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_ledger_cor6(const LedgerArgs& a, const CLI::App* sub, const Common& c, Run& run) {
  const auto ledger = hfk::Ledger::open(resolve(a.path));
  json out = json::object();
  for (const auto& n : names_of(sub)) {
    const auto& e = ledger.get(n);
    const bool obstructed = hfk::cor6_obstruction(e);
    out[n] = {{"obstructed", obstructed}, {"irreducibility", hfk::irreducibility_name(hfk::irreducibility(e.top_poincare))}};
    if (!c.json_out)
      std::cout << n << ": " << (obstructed ? "obstructed" : "not obstructed") << " (" << e.top_poincare.to_string()
                << ")\n";
  }
  run.report().results["cor6"] = out;
  return kExitOk;
}

int cmd_ledger_b1(const LedgerArgs& a, const CLI::App* sub, const Common& c, Run& run) {
  const auto ledger = hfk::Ledger::open(resolve(a.path));
  const auto names = names_of(sub);
  if (names.size() != 3) throw hfk::Error(hfk::ErrorCode::InvalidArgument, "b1check takes three entries");
  const bool ok = hfk::b1_sum_check(ledger.get(names[0]), ledger.get(names[1]), ledger.get(names[2]));
  run.report().results["b1_sum"] = ok;
  if (!c.json_out) std::cout << (ok ? "true" : "false") << '\n';
  return ok ? kExitOk : kExitFail;
}

// --- cable ---------------------------------------------------------------

struct CableArgs {
  int p = 1;
  int q = 1;
  std::string path;
  std::string compare;
};

int cmd_cable(const CableArgs& a, const Common& c, Run& run) {
  const auto opts = c.engine();
  const auto path = resolve(a.path);
  const auto k = hfk::load_grid(path);
  run.input(path);
  if (hfk::link_components(k) != 1) throw hfk::Error(hfk::ErrorCode::NotAKnot, "cable companion must be a knot");
  const auto top = hfk::top_group(k, opts);
  const auto pred = hfk::cable_top_group_predict(a.p, a.q, top.alex2_top, top.poincare);
  auto& res = run.report().results;
  res["knot_top"] = hfk::to_json(top);
  res["prediction"] = hfk::to_json(pred);
  if (!c.json_out)
    std::cout << "predicted top group of the (" << a.p << "," << a.q << ") cable: A=" << half(pred.alex2)
              << " P=" << pred.poincare.to_string() << "  [" << pred.convention << "]\n";
  if (a.compare.empty()) return kExitOk;
  const auto cpath = resolve(a.compare);
  const auto cg = hfk::load_grid(cpath);
  run.input(cpath);
  const auto direct = hfk::top_group(cg, opts);
  const bool match = direct.alex2_top == pred.alex2 && direct.poincare == pred.poincare;
  res["direct"] = hfk::to_json(direct);
  res["match"] = match;
  if (!c.json_out)
    std::cout << "direct top group of " << cg.name() << ": A=" << half(direct.alex2_top)
              << " P=" << direct.poincare.to_string() << " -> " << (match ? "match" : "MISMATCH") << '\n';
  return match ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology from grid diagrams"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (0 = all cores)");
  app.add_option("--max-generators", common.max_generators, "Abort past this many generators");
  app.add_flag("--json", common.json_out, "Emit a JSON run report");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Homology of a grid diagram");
  compute->add_option("grid", ca.path, "Grid file")->required();
  compute->add_option("--window", ca.window, "full or bottom")->check(CLI::IsMember({"full", "bottom"}));
  compute->add_flag("--hat", ca.hat, "Report hat homology instead of tilde");
  compute->add_flag("--invariants", ca.invariants, "Also report genus, tau tests and the Alexander polynomial");
  compute->add_flag("--json", common.json_out, "Emit a JSON run report");

  MurasugiArgs ma;
  auto* murasugi = app.add_subcommand("murasugi", "Check the tensor-product and tau statements on a Murasugi sum");
  murasugi->add_option("case", ma.case_path, "Case JSON file");
  murasugi->add_option("--connect", ma.connect, "Build the connected sum of two grids")->expected(2);
  murasugi->add_flag("--json", common.json_out, "Emit a JSON run report");

  LedgerArgs la;
  auto* ledger = app.add_subcommand("ledger", "Grothendieck-group ledger");
  ledger->require_subcommand(1);
  ledger->add_option("--ledger", la.path, "Ledger JSON file");
  auto* l_add = ledger->add_subcommand("add", "Add an entry");
  l_add->add_option("name", la.name, "Entry name")->required();
  l_add->add_option("--grid", la.grid, "Compute the top group from this grid");
  l_add->add_option("--poly", la.poly, "Literature polynomial as exp:coeff,...");
  l_add->add_option("--b1", la.b1, "Literature b1_min");
  l_add->add_option("--note", la.note, "Free-form note");
  auto* l_p = ledger->add_subcommand("p", "Image in rational functions; prefix a name with - to invert");
  auto* l_indep = ledger->add_subcommand("indep", "Independence by pairwise coprimality");
  auto* l_cor6 = ledger->add_subcommand("cor6", "Thin-closure obstruction");
  auto* l_b1 = ledger->add_subcommand("b1check", "b1_min additivity: e1 e2 sum");
  for (auto* s : {l_add, l_p, l_indep, l_cor6, l_b1}) {
    s->add_option("--ledger", la.path, "Ledger JSON file");
    s->add_flag("--json", common.json_out, "Emit a JSON run report");
  }
  for (auto* s : {l_p, l_indep, l_cor6, l_b1}) s->allow_extras();

  CableArgs cab;
  auto* cable = app.add_subcommand("cable", "Cable top-group prediction");
  cable->add_option("--p", cab.p, "Cable p")->required();
  cable->add_option("--q", cab.q, "Cable q")->required();
  cable->add_option("knot", cab.path, "Companion knot grid")->required();
  cable->add_option("--compare", cab.compare, "Grid of the cable for a direct comparison");
  cable->add_flag("--json", common.json_out, "Emit a JSON run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  Run run(std::vector<std::string>(argv, argv + argc));
  int rc = kExitOk;
  try {
    if (*compute) rc = cmd_compute(ca, common, run);
    else if (*murasugi) rc = cmd_murasugi(ma, common, run);
    else if (*cable) rc = cmd_cable(cab, common, run);
    else if (*l_add) rc = cmd_ledger_add(la, common, run);
    else if (*l_p) rc = cmd_ledger_p(la, l_p, common, run);
    else if (*l_indep) rc = cmd_ledger_indep(la, l_indep, common, run);
    else if (*l_cor6) rc = cmd_ledger_cor6(la, l_cor6, common, run);
    else if (*l_b1) rc = cmd_ledger_b1(la, l_b1, common, run);
  } catch (const hfk::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  run.finish(common.json_out);
  return rc;
}
