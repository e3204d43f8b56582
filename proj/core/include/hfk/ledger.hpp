#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfk/laurent.hpp"

namespace hfk {

struct LedgerEntry;
// An entry with its multiplicity; negative for inverses.
using SignedEntry = std::pair<const LedgerEntry*, int>;

// Quotient of two Laurent polynomials in t, kept up to units t^k: both parts
// are unit-normalized, coprime over Z, and the denominator has positive
// leading coefficient. After cancellation the parts may carry negative
// coefficients (e.g. (1+t^3)/(1+t) = 1-t+t^2).
class PosRationalFunction {
 public:
  PosRationalFunction();  // the identity 1/1
  // Throws InvalidArgument if either part is zero.
  static PosRationalFunction reduce(const LaurentPoly& numerator, const LaurentPoly& denominator);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }

  PosRationalFunction inverse() const;
  friend PosRationalFunction operator*(const PosRationalFunction& a, const PosRationalFunction& b);
  bool operator==(const PosRationalFunction&) const = default;

  bool is_one() const;
  // Value at t = 1 as a reduced fraction (numerator, denominator).
  std::pair<std::int64_t, std::int64_t> at_one() const;
  std::string to_string() const;

 private:
  // Parts already known to be coprime; only normalizes units and signs.
  static PosRationalFunction from_coprime(const LaurentPoly& numerator, const LaurentPoly& denominator);
  friend PosRationalFunction p_image(const std::vector<SignedEntry>& entries);

  LaurentPoly num_;
  LaurentPoly den_;
};

enum class EntrySource { Computed, Literature };

std::string source_name(EntrySource s);
EntrySource parse_source(const std::string& s);

struct LedgerEntry {
  std::string name;
  // Poincare polynomial of the top group in t = Maslov variable (undoubled).
  LaurentPoly top_poincare;
  int b1_min = 0;
  EntrySource source = EntrySource::Literature;
  // Grid file the computed entry came from.
  std::optional<std::string> grid;
  std::string note;

  bool operator==(const LedgerEntry&) const = default;
};

// Throws InvalidArgument on a zero polynomial, a negative b1, or a computed
// entry without a grid reference.
void check_entry(const LedgerEntry& e);

// Converts a doubled-exponent Maslov polynomial to the ledger's t variable.
LaurentPoly ledger_polynomial(const LaurentPoly& doubled);

// Product of the entries raised to their signs. Throws InvalidArgument on an
// empty multiset.
PosRationalFunction p_image(const std::vector<SignedEntry>& entries);

// True iff every pair of top polynomials has gcd 1 after clearing t-units.
// Throws InvalidArgument for fewer than two entries.
bool independent_by_coprimality(const std::vector<const LedgerEntry*>& entries);

// Top group supported in at least two Maslov gradings.
bool cor6_obstruction(const LedgerEntry& e);

bool b1_sum_check(const LedgerEntry& e1, const LedgerEntry& e2, const LedgerEntry& sum);

enum class Irreducibility { Irreducible, Reducible, Undetermined };
std::string irreducibility_name(Irreducibility r);
// Decided only up to degree 2 after clearing t-units.
Irreducibility irreducibility(const LaurentPoly& p);

// Append-only JSON file of entries with unique names.
class Ledger {
 public:
  Ledger() = default;
  // A missing file yields an empty ledger bound to that path.
  static Ledger open(const std::filesystem::path& path);

  const std::vector<LedgerEntry>& entries() const noexcept { return entries_; }
  // Throws UnknownEntry.
  const LedgerEntry& get(const std::string& name) const;
  const LedgerEntry* find(const std::string& name) const;
  // Throws DuplicateName.
  void add(LedgerEntry e);
  void save() const;
  void save_as(const std::filesystem::path& path) const;

  std::string to_json() const;
  static Ledger from_json(const std::string& text);

 private:
  std::filesystem::path path_;
  std::vector<LedgerEntry> entries_;
};

}  // namespace hfk
