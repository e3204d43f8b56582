#include "hfk/laurent.hpp"

#include <cstdint>
#include <optional>
#include <numeric>
#include <vector>
#include <sstream>

#include "hfk/error.hpp"

namespace hfk {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::InvalidArgument, "polynomial coefficient overflow");
  return out;
}

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::InvalidArgument, "polynomial coefficient overflow");
  return out;
}

// Pseudo-remainder of a by b, both with lowest exponent 0, up to a nonzero
// scalar. Each step eliminates the leading term with the smallest multipliers
// and drops the content so coefficients stay bounded.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const int db = b.max_exponent();
  const Coeff lb = b.leading_coefficient();
  while (!a.is_zero() && a.max_exponent() >= db) {
    const int shift = a.max_exponent() - db;
    const Coeff la = a.leading_coefficient();
    const Coeff g = std::gcd(la, lb);
    a = a * (lb / g) - b.shifted(shift) * (la / g);
    if (const Coeff c = content(a); c > 1) {
      LaurentPoly reduced(a.variable());
      for (const auto& [e, v] : a.terms()) reduced.add_term(e, v / c);
      a = std::move(reduced);
    }
  }
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff, char variable) {
  LaurentPoly p(variable);
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Coeff>& terms, char variable) {
  LaurentPoly p(variable);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Coeff LaurentPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

Coeff LaurentPoly::evaluate_at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

void LaurentPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::unit_normalized() const {
  if (terms_.empty()) return *this;
  return shifted(-min_exponent());
}

LaurentPoly LaurentPoly::with_variable(char variable) const {
  LaurentPoly out = *this;
  out.var_ = variable;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.var_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, Coeff s) {
  LaurentPoly out(a.var_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, checked_mul(c, s));
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var_;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial");
  LaurentPoly rem = num;
  LaurentPoly quot(num.variable());
  const int dtop = den.max_exponent();
  const int dlow = den.min_exponent();
  const Coeff lead = den.leading_coefficient();
  while (!rem.is_zero()) {
    if (rem.max_exponent() - dtop < rem.min_exponent() - dlow)
      throw Error(ErrorCode::NotDivisible, num.to_string() + " by " + den.to_string());
    const Coeff c = rem.leading_coefficient();
    if (c % lead != 0) throw Error(ErrorCode::NotDivisible, num.to_string() + " by " + den.to_string());
    const int shift = rem.max_exponent() - dtop;
    const auto term = LaurentPoly::monomial(shift, c / lead, num.variable());
    quot += term;
    rem -= den.shifted(shift) * (c / lead);
  }
  return quot;
}

Coeff content(const LaurentPoly& p) {
  Coeff g = 0;
  for (const auto& [e, c] : p.terms()) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Coeff g = content(p);
  if (p.leading_coefficient() < 0) g = -g;
  LaurentPoly out(p.variable());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c / g);
  return out;
}

namespace {

__extension__ using U128 = unsigned __int128;

// Polynomial arithmetic over F_p, p = 2^61 - 1, dense and lowest degree first.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<U128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a))
    if (e & 1) r = mul_mod(r, a);
  return r;
}

std::uint64_t to_mod(Coeff c) {
  const auto m = static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(((c % m) + m) % m);
}

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ModPoly to_mod_poly(const LaurentPoly& p) {
  ModPoly out(static_cast<std::size_t>(p.max_exponent()) + 1, 0);
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = to_mod(c);
  return out;
}

ModPoly mod_remainder(ModPoly a, const ModPoly& b) {
  const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
  while (a.size() >= b.size()) {
    const std::uint64_t f = mul_mod(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + kPrime - mul_mod(f, b[i])) % kPrime;
    trim(a);
  }
  return a;
}

bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  try {
    divide_exact(p, d);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Gcd of two primitive polynomials with lowest exponent 0 from their image
// mod p. The image has degree at least that of the true gcd G, and lc(G)
// divides gamma = gcd(lc(x), lc(y)), so the symmetric lift of gamma times the
// monic image is a multiple of G whenever its coefficients fit. A candidate
// that divides both inputs is then exactly G. Returns nullopt when the lift
// cannot be confirmed.
std::optional<LaurentPoly> modular_gcd(const LaurentPoly& x, const LaurentPoly& y) {
  ModPoly a = to_mod_poly(x), b = to_mod_poly(y);
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  const std::uint64_t scale = mul_mod(to_mod(std::gcd(x.leading_coefficient(), y.leading_coefficient())),
                                      pow_mod(a.back(), kPrime - 2));
  LaurentPoly candidate(x.variable());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t v = mul_mod(a[i], scale);
    const Coeff c = v > kPrime / 2 ? -static_cast<Coeff>(kPrime - v) : static_cast<Coeff>(v);
    candidate.add_term(static_cast<int>(i), c);
  }
  if (candidate.is_zero()) return std::nullopt;
  candidate = primitive_part(candidate);
  if (!divides(candidate, x) || !divides(candidate, y)) return std::nullopt;
  return candidate;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive_part(b.unit_normalized()) * content(b);
  if (b.is_zero()) return primitive_part(a.unit_normalized()) * content(a);
  const Coeff cont = std::gcd(content(a), content(b));
  LaurentPoly x = primitive_part(a.unit_normalized());
  LaurentPoly y = primitive_part(b.unit_normalized());
  if (auto g = modular_gcd(x, y)) return g->with_variable(a.variable()) * cont;
  if (x.max_exponent() < y.max_exponent()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r.unit_normalized());
  }
  return primitive_part(x.unit_normalized()).with_variable(a.variable()) * cont;
}

}  // namespace hfk
