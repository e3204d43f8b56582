#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hfk {

// Laurent polynomial in a single formal variable with integer coefficients.
// Zero coefficients are never stored. The variable tag only affects printing
// and equality ('m' for Maslov generating functions, 't' otherwise).
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  explicit LaurentPoly(char variable) : var_(variable) {}

  static LaurentPoly monomial(int exponent, Coeff coeff = 1, char variable = 't');
  static LaurentPoly from_terms(const std::map<int, Coeff>& terms, char variable = 't');

  char variable() const noexcept { return var_; }
  const std::map<int, Coeff>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // Throws InvalidArgument on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  Coeff coefficient(int exponent) const;
  Coeff leading_coefficient() const { return coefficient(max_exponent()); }
  Coeff trailing_coefficient() const { return coefficient(min_exponent()); }
  Coeff evaluate_at_one() const;
  Coeff total() const { return evaluate_at_one(); }
  bool nonnegative() const;

  void add_term(int exponent, Coeff coeff);

  LaurentPoly shifted(int k) const;
  LaurentPoly reflected() const;
  // Multiplies by the unit t^k that moves the lowest exponent to 0.
  LaurentPoly unit_normalized() const;
  LaurentPoly with_variable(char variable) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, Coeff s);
  bool operator==(const LaurentPoly& other) const = default;

  // Descending exponents, e.g. "t - 1 + t^-1".
  std::string to_string() const;

 private:
  std::map<int, Coeff> terms_;
  char var_ = 't';
};

// Exact division in Z[t, 1/t]; throws NotDivisible if a remainder is left or a
// quotient coefficient would not be integral.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

LaurentPoly::Coeff content(const LaurentPoly& p);
LaurentPoly primitive_part(const LaurentPoly& p);

// Greatest common divisor in Z[t] after clearing t-units from both inputs.
// Normalized to lowest exponent 0 and positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hfk
