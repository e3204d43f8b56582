#include "hfk/ledger.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hfk/error.hpp"

namespace hfk {

namespace {

constexpr int kLedgerSchema = 1;

LaurentPoly one() { return LaurentPoly::monomial(0); }

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) p.add_term(std::stoi(k), v.get<LaurentPoly::Coeff>());
  return p;
}

}  // namespace

PosRationalFunction::PosRationalFunction() : num_(one()), den_(one()) {}

PosRationalFunction PosRationalFunction::reduce(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (numerator.is_zero() || denominator.is_zero())
    throw Error(ErrorCode::InvalidArgument, "rational function with a zero part");
  const LaurentPoly a = numerator.with_variable('t').unit_normalized();
  const LaurentPoly b = denominator.with_variable('t').unit_normalized();
  const LaurentPoly g = poly_gcd(a, b);
  return from_coprime(divide_exact(a, g), divide_exact(b, g));
}

PosRationalFunction PosRationalFunction::from_coprime(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  PosRationalFunction r;
  r.num_ = numerator.with_variable('t').unit_normalized();
  r.den_ = denominator.with_variable('t').unit_normalized();
  if (r.den_.leading_coefficient() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

PosRationalFunction PosRationalFunction::inverse() const { return reduce(den_, num_); }

// Both operands are reduced, so only the cross gcds can be nontrivial. This
// keeps the gcd computations at the size of the factors.
PosRationalFunction operator*(const PosRationalFunction& a, const PosRationalFunction& b) {
  const LaurentPoly g1 = poly_gcd(a.num_, b.den_);
  const LaurentPoly g2 = poly_gcd(b.num_, a.den_);
  return PosRationalFunction::from_coprime(divide_exact(a.num_, g1) * divide_exact(b.num_, g2),
                                           divide_exact(b.den_, g1) * divide_exact(a.den_, g2));
}

bool PosRationalFunction::is_one() const { return num_ == one() && den_ == one(); }

std::pair<std::int64_t, std::int64_t> PosRationalFunction::at_one() const {
  std::int64_t n = num_.evaluate_at_one();
  std::int64_t d = den_.evaluate_at_one();
  if (d == 0) throw Error(ErrorCode::NotDivisible, "denominator vanishes at t = 1");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const auto g = std::gcd(n, d);
  return {n / g, d / g};
}

std::string PosRationalFunction::to_string() const {
  if (den_ == one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::string source_name(EntrySource s) { return s == EntrySource::Computed ? "computed" : "literature"; }

EntrySource parse_source(const std::string& s) {
  if (s == "computed") return EntrySource::Computed;
  if (s == "literature") return EntrySource::Literature;
  throw Error(ErrorCode::ParseError, "unknown entry source '" + s + "'");
}

void check_entry(const LedgerEntry& e) {
  if (e.name.empty()) throw Error(ErrorCode::InvalidArgument, "ledger entry needs a name");
  if (e.top_poincare.is_zero()) throw Error(ErrorCode::InvalidArgument, e.name + ": zero top polynomial");
  if (!e.top_poincare.nonnegative())
    throw Error(ErrorCode::InvalidArgument, e.name + ": top polynomial has a negative rank");
  if (e.b1_min < 0) throw Error(ErrorCode::InvalidArgument, e.name + ": negative b1_min");
  if (e.source == EntrySource::Computed && !e.grid)
    throw Error(ErrorCode::InvalidArgument, e.name + ": computed entry without a grid reference");
}

LaurentPoly ledger_polynomial(const LaurentPoly& doubled) {
  LaurentPoly p('t');
  for (const auto& [e, c] : doubled.terms()) {
    if (e % 2 != 0) throw Error(ErrorCode::InvalidArgument, "half-integral Maslov grading");
    p.add_term(e / 2, c);
  }
  return p;
}

PosRationalFunction p_image(const std::vector<SignedEntry>& entries) {
  if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "p_image of an empty multiset");
  // Cancel factor against factor: once every numerator factor is coprime to
  // every denominator factor, so are the products.
  std::vector<LaurentPoly> nums, dens;
  for (const auto& [e, sign] : entries)
    for (int k = 0; k < std::abs(sign); ++k)
      (sign > 0 ? nums : dens).push_back(e->top_poincare.with_variable('t').unit_normalized());
  for (auto& n : nums)
    for (auto& d : dens) {
      const LaurentPoly g = poly_gcd(n, d);
      if (g == one()) continue;
      n = divide_exact(n, g);
      d = divide_exact(d, g);
    }
  LaurentPoly num = one(), den = one();
  for (const auto& n : nums) num = num * n;
  for (const auto& d : dens) den = den * d;
  return PosRationalFunction::from_coprime(num, den);
}

bool independent_by_coprimality(const std::vector<const LedgerEntry*>& entries) {
  if (entries.size() < 2) throw Error(ErrorCode::InvalidArgument, "independence needs at least two entries");
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (poly_gcd(entries[i]->top_poincare, entries[j]->top_poincare).with_variable('t') != one()) return false;
  return true;
}

bool cor6_obstruction(const LedgerEntry& e) { return e.top_poincare.support_size() >= 2; }

bool b1_sum_check(const LedgerEntry& e1, const LedgerEntry& e2, const LedgerEntry& sum) {
  return sum.b1_min == e1.b1_min + e2.b1_min;
}

std::string irreducibility_name(Irreducibility r) {
  switch (r) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Irreducibility irreducibility(const LaurentPoly& p) {
  if (p.is_zero()) return Irreducibility::Undetermined;
  const LaurentPoly q = p.unit_normalized();
  const int deg = q.max_exponent();
  const auto c = content(q);
  if (deg == 0) {
    // Units are neither; a constant with |c| > 1 is a product of primes only
    // when c is prime, which is beyond what the ledger needs.
    return Irreducibility::Undetermined;
  }
  if (c != 1 && c != -1) return Irreducibility::Reducible;
  if (deg == 1) return Irreducibility::Irreducible;
  if (deg > 2) return Irreducibility::Undetermined;
  // Primitive quadratic: reducible over Z iff the discriminant is a square.
  const auto a = q.coefficient(2);
  const auto b = q.coefficient(1);
  const auto cc = q.coefficient(0);
  const auto disc = b * b - 4 * a * cc;
  if (disc < 0) return Irreducibility::Irreducible;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (r * r > disc) --r;
  while ((r + 1) * (r + 1) <= disc) ++r;
  return r * r == disc ? Irreducibility::Reducible : Irreducibility::Irreducible;
}

Ledger Ledger::open(const std::filesystem::path& path) {
  Ledger l;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FileNotFound, path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    l = from_json(ss.str());
  }
  l.path_ = path;
  return l;
}

const LedgerEntry* Ledger::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const LedgerEntry& Ledger::get(const std::string& name) const {
  if (const auto* e = find(name)) return *e;
  throw Error(ErrorCode::UnknownEntry, "no ledger entry named '" + name + "'");
}

void Ledger::add(LedgerEntry e) {
  check_entry(e);
  if (find(e.name)) throw Error(ErrorCode::DuplicateName, "ledger already has an entry named '" + e.name + "'");
  e.top_poincare = e.top_poincare.with_variable('t');
  entries_.push_back(std::move(e));
}

void Ledger::save() const { save_as(path_); }

void Ledger::save_as(const std::filesystem::path& path) const {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "ledger has no file path");
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::FileNotFound, tmp.string());
    out << to_json() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::string Ledger::to_json() const {
  nlohmann::json j;
  j["schema"] = kLedgerSchema;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json je;
    je["name"] = e.name;
    je["top_poincare"] = poly_to_json(e.top_poincare);
    je["b1_min"] = e.b1_min;
    je["source"] = source_name(e.source);
    if (e.grid) je["grid"] = *e.grid;
    if (!e.note.empty()) je["note"] = e.note;
    j["entries"].push_back(je);
  }
  return j.dump(2);
}

Ledger Ledger::from_json(const std::string& text) {
  Ledger l;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("schema", 0) != kLedgerSchema) throw Error(ErrorCode::ParseError, "unsupported ledger schema");
    for (const auto& je : j.at("entries")) {
      LedgerEntry e;
      e.name = je.at("name").get<std::string>();
      e.top_poincare = poly_from_json(je.at("top_poincare"));
      e.b1_min = je.at("b1_min").get<int>();
      e.source = parse_source(je.at("source").get<std::string>());
      if (je.contains("grid")) e.grid = je.at("grid").get<std::string>();
      e.note = je.value("note", std::string{});
      l.add(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("ledger: ") + e.what());
  }
  return l;
}

}  // namespace hfk
