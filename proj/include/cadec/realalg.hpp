#pragma once

// Real algebraic numbers and sample points.
//
// A sample point is a list of coordinates (x_0, ..., x_{k-1}). Coordinate i is
// either an exact rational or the unique root in an open rational interval
// (lo, hi) of a defining polynomial D_i(x_0, ..., x_i), where D_i evaluated at
// the earlier coordinates is square-free in x_i with nonzero leading
// coefficient and nonzero at lo and hi. Univariate numbers are the case i = 0.
//
// Signs are found by rational interval evaluation while refining coordinates;
// when that stalls, zero is decided exactly by a Euclidean gcd over the tower
// of coordinates (pseudo-remainders whose leading coefficients are tested for
// vanishing recursively).
//
// Refinement narrows intervals in place, so all queries take the point by
// non-const reference. A point must not be refined by two threads at once.

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "cadec/polynomial.hpp"

namespace cadec {

struct Interval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational width() const { return hi - lo; }
};

class AlgebraicNumber {
 public:
  /// The exact rational r as coordinate of variable v.
  static AlgebraicNumber rational(Var v, const Rational& r);
  /// Root of `defining` in x_v inside (lo, hi); `sign_lo` is the sign of
  /// defining at x_v = lo over the coordinates below v.
  AlgebraicNumber(Var v, Polynomial defining, Rational lo, Rational hi, int sign_lo);

  Var var() const { return var_; }
  bool is_rational() const { return exact_; }
  /// The exact value; only meaningful when is_rational().
  const Rational& value() const { return lo_; }
  const Polynomial& defining() const { return *defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  int sign_at_lo() const { return sign_lo_; }
  Interval interval() const { return {lo_, hi_}; }

  /// Approximation (midpoint of the current interval).
  double approx() const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  friend class SamplePoint;
  friend void narrow_to(AlgebraicNumber& a, const Rational& lo, const Rational& hi);
  AlgebraicNumber() = default;
  void make_exact(const Rational& r);

  Var var_ = 0;
  std::shared_ptr<const Polynomial> defining_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;
  bool exact_ = false;
};

class SamplePoint {
 public:
  SamplePoint() = default;
  explicit SamplePoint(std::vector<AlgebraicNumber> coords);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const AlgebraicNumber& operator[](std::size_t i) const { return coords_[i]; }
  AlgebraicNumber& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<AlgebraicNumber>& coords() const { return coords_; }

  /// Appends a coordinate for variable size().
  void push_back(AlgebraicNumber a);
  SamplePoint extended(AlgebraicNumber a) const;
  SamplePoint prefix(std::size_t k) const;

  /// Bisects coordinate i once (no-op for exact coordinates).
  void refine_coordinate(std::size_t i);

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<AlgebraicNumber> coords_;
};

/// Rational interval enclosure of p at s using the current intervals.
Interval enclose(const Polynomial& p, const SamplePoint& s);

/// Substitutes every exactly-rational coordinate of s into p.
Polynomial substitute_rational_coords(const Polynomial& p, const SamplePoint& s);

/// Exact sign of p at s. All variables of p must be below s.size().
int sign_at(const Polynomial& p, SamplePoint& s);

/// Sign of p at s when p is known not to vanish there (no zero test).
int sign_nonzero(const Polynomial& p, SamplePoint& s);

/// Exact test p(s) == 0.
bool vanishes_at(const Polynomial& p, SamplePoint& s);

/// gcd over Q(s) of a and b viewed as polynomials in v, where v = index of
/// the first coordinate not used. The result's leading coefficient in v does
/// not vanish at s; a constant result means coprime at s.
Polynomial tower_gcd(const Polynomial& a, const Polynomial& b, SamplePoint& s, Var v);

/// Drops leading terms in v whose coefficients vanish at s.
Polynomial trim_at(const Polynomial& p, SamplePoint& s, Var v);

struct RootIsolation {
  bool nullified = false;
  /// Square-free cofactor used as defining polynomial of the roots.
  Polynomial squarefree;
  /// Distinct real roots, ascending, for variable s.size().
  std::vector<AlgebraicNumber> roots;
};

/// Real roots in x_k (k = s.size()) of p(s, x_k). Reports nullification when
/// every coefficient vanishes at s.
RootIsolation substitute_partial(const Polynomial& p, SamplePoint& s);

/// Real roots of a nonzero univariate polynomial (in any single variable),
/// returned as numbers in variable 0.
std::vector<AlgebraicNumber> isolate_roots(const Polynomial& p);

/// Exact comparison of two coordinates of variable base.size() over base.
std::strong_ordering compare(AlgebraicNumber& a, AlgebraicNumber& b, SamplePoint& base);
std::strong_ordering compare(AlgebraicNumber& a, const Rational& r, SamplePoint& base);
/// Univariate numbers (variable 0).
std::strong_ordering compare(AlgebraicNumber& a, AlgebraicNumber& b);

/// Narrows the interval of a (variable base.size()) to width <= width.
void refine(AlgebraicNumber& a, const Rational& width, SamplePoint& base);
void refine(AlgebraicNumber& a, const Rational& width);

/// A rational strictly between a and b (a < b required); the simplest dyadic
/// available after separating them.
Rational rational_between(AlgebraicNumber& a, AlgebraicNumber& b, SamplePoint& base);
Rational rational_below(const AlgebraicNumber& a);
Rational rational_above(const AlgebraicNumber& a);

/// Re-expresses coordinate i of s as a root of a univariate polynomial with
/// rational coefficients (iterated resultants), in variable 0.
AlgebraicNumber univariate_form(SamplePoint& s, std::size_t i);

/// Decimal rendering of a rational with `digits` fractional digits (truncated
/// toward negative infinity when `floor`, otherwise toward positive infinity).
std::string decimal_string(const Rational& r, int digits, bool floor);

}  // namespace cadec
