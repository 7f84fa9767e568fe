#pragma once

// Algebraic subroutines over Q[x_0, ..., x_{n-1}]: gcd, content, square-free
// parts, resultants, discriminants and principal subresultant coefficients.

#include <stdexcept>
#include <vector>

#include "cadec/polynomial.hpp"

namespace cadec {

/// Raised when an operation needs a polynomial of higher degree in a variable.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Scales p to integer coprime coefficients with a positive leading coefficient.
Polynomial normalize_unit(const Polynomial& p);

/// The rational c such that p / c has integer coprime coefficients and positive
/// leading coefficient. Zero for the zero polynomial.
Rational rational_content(const Polynomial& p);

/// Normalized gcd (see normalize_unit). gcd(0, 0) = 0; any constant gives 1.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ContentSplit {
  Polynomial content;
  Polynomial primitive;
};

/// content * primitive == p exactly; the primitive part is normalized with
/// normalize_unit and its coefficients in v have constant gcd.
ContentSplit content_primitive(const Polynomial& p, Var v);

/// Primitive part (normalized) of p viewed as a polynomial in v.
Polynomial primitive_part(const Polynomial& p, Var v);

/// Content in v times the square-free part of the primitive part, normalized.
Polynomial squarefree_part(const Polynomial& p, Var v);

/// Resultant in v, convention res(f, g) = lc(g)^deg f * prod f(beta) over the
/// roots beta of g. Computed through the subresultant chain.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v);

/// (-1)^(d(d-1)/2) * res(f, f') / lc(f), d = deg_v f >= 2.
Polynomial discriminant(const Polynomial& p, Var v);

/// psc_0 ... psc_min(deg p, deg q), sign-adjusted so psc_0 equals resultant().
/// Requires deg_v p >= deg_v q >= 0 and p nonzero.
std::vector<Polynomial> subresultant_psc(const Polynomial& p, const Polynomial& q, Var v);

/// Square-free, primitive, normalized factors whose product has the same zero
/// set as p: the square-free part of the primitive part in the main variable,
/// followed by the components of the content, recursively. Constants dropped.
std::vector<Polynomial> zero_set_components(const Polynomial& p);

/// True if p is primitive in v (coefficient gcd is a constant).
bool is_primitive(const Polynomial& p, Var v);

}  // namespace cadec
