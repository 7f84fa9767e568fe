#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are identified by their position in a global order (0-based).
// The highest-index variable occurring in a polynomial is its main variable.
// Terms are kept sorted descending in the lexicographic order that treats
// the highest variable as most significant, so the terms of a fixed degree
// in the main variable form one contiguous block.

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cadec {

using Rational = mpq_class;
using Integer = mpz_class;
using Var = int;

inline constexpr int kMaxVars = 16;

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  std::uint16_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  std::uint16_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }

  bool is_one() const;
  int total_degree() const;
  /// Highest variable with positive exponent, -1 for the unit monomial.
  Var top_var() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic with the highest variable most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v, unsigned power = 1);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Sum of coeffs[i] * v^i.
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for zero).
  Rational constant_value() const;
  Var main_var() const;
  int degree(Var v) const;
  int total_degree() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  /// Bitmask of variables that occur.
  std::uint32_t variables() const;

  /// Coefficient list in v; entry i multiplies v^i.
  std::vector<Polynomial> coefficients(Var v) const;
  Polynomial coeff(Var v, int k) const;
  Polynomial leading_coeff(Var v) const;
  /// p minus its leading term in v.
  Polynomial reductum(Var v) const;
  Polynomial derivative(Var v) const;
  Polynomial substitute(Var v, const Rational& value) const;
  /// Replaces v by (a + b*v).
  Polynomial compose_linear(Var v, const Rational& a, const Rational& b) const;
  Polynomial shift_var(Var v, unsigned k) const;  // multiply by v^k
  Polynomial pow(unsigned k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Deterministic total order used for canonical set iteration.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// Sign of the lexicographically leading coefficient (0 for zero).
  int leading_sign() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<Term> terms_;  // sorted descending, no zero coefficients
};

std::string default_var_name(Var v);

/// Exact quotient a / b if b divides a in Q[x], nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder: lc_v(b)^(deg a - deg b + 1) * a mod b, as polynomials in v.
Polynomial prem(const Polynomial& a, const Polynomial& b, Var v);

/// Pseudo-division: returns (q, r) with lc_v(b)^(deg a - deg b + 1) * a = q*b + r.
std::pair<Polynomial, Polynomial> pseudo_divide(const Polynomial& a, const Polynomial& b, Var v);

}  // namespace cadec
