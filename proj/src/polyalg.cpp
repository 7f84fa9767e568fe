#include "cadec/polyalg.hpp"

#include <utility>

namespace cadec {

namespace {

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return std::move(*q);
}

/// Normalized gcd of the coefficients of p in v.
Polynomial content_poly(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& c : p.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial sign_power(int exponent) { return (exponent % 2 == 0) ? Polynomial(1) : Polynomial(-1); }

/// Principal subresultant coefficients in the determinant convention,
/// deg p >= deg q >= 1. Entry j is psc_j.
std::vector<Polynomial> psc_chain(const Polynomial& P, const Polynomial& Q, Var v) {
  const int p = P.degree(v);
  const int q = Q.degree(v);
  std::vector<Polynomial> psc(static_cast<std::size_t>(q) + 1);
  Polynomial s = Q.leading_coeff(v).pow(static_cast<unsigned>(p - q));
  psc[static_cast<std::size_t>(q)] = s;
  Polynomial A = Q;
  Polynomial B = prem(P, -Q, v);
  while (!B.is_zero()) {
    const int d = A.degree(v);
    const int e = B.degree(v);
    const Polynomial lcB = B.leading_coeff(v);
    if (e == d - 1) psc[static_cast<std::size_t>(d - 1)] = lcB;
    const int delta = d - e;
    Polynomial C = B;
    if (delta > 1) {
      C = exact(lcB.pow(static_cast<unsigned>(delta - 1)) * B, s.pow(static_cast<unsigned>(delta - 1)));
    }
    psc[static_cast<std::size_t>(e)] = C.leading_coeff(v);
    if (e == 0) break;
    B = exact(prem(A, -B, v), s.pow(static_cast<unsigned>(delta)) * A.leading_coeff(v));
    A = std::move(C);
    s = A.leading_coeff(v);
  }
  return psc;
}

}  // namespace

Rational rational_content(const Polynomial& p) {
  if (p.is_zero()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  if (p.leading_sign() < 0) c = -c;
  return c;
}

Polynomial normalize_unit(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (c == 1) return p;
  return p * Rational(1 / c);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return normalize_unit(a);
  const Var v = std::max(a.main_var(), b.main_var());
  if (a.degree(v) == 0) return gcd(a, content_poly(b, v));
  if (b.degree(v) == 0) return gcd(content_poly(a, v), b);

  const Polynomial ca = content_poly(a, v);
  const Polynomial cb = content_poly(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial pa = normalize_unit(exact(a, ca));
  Polynomial pb = normalize_unit(exact(b, cb));
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    Polynomial r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) return c;
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return normalize_unit(primitive_part(pb, v) * c);
}

ContentSplit content_primitive(const Polynomial& p, Var v) {
  if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
  Polynomial pp = normalize_unit(exact(p, content_poly(p, v)));
  Polynomial content = exact(p, pp);
  return {std::move(content), std::move(pp)};
}

Polynomial primitive_part(const Polynomial& p, Var v) {
  if (p.is_zero()) return p;
  return normalize_unit(exact(p, content_poly(p, v)));
}

bool is_primitive(const Polynomial& p, Var v) { return !p.is_zero() && content_poly(p, v).is_constant(); }

Polynomial squarefree_part(const Polynomial& p, Var v) {
  auto [content, pp] = content_primitive(p, v);
  if (pp.degree(v) >= 1) {
    Polynomial g = gcd(pp, pp.derivative(v));
    if (!g.is_constant()) pp = exact(pp, g);
  }
  return normalize_unit(content * pp);
}

std::vector<Polynomial> subresultant_psc(const Polynomial& p, const Polynomial& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("subresultant of the zero polynomial");
  const int m = p.degree(v);
  const int n = q.degree(v);
  if (m < n) throw DegreeError("subresultant_psc requires deg p >= deg q");
  if (n == 0) return {q.pow(static_cast<unsigned>(m))};
  auto chain = psc_chain(p, q, v);
  for (int j = 0; j <= n; ++j) {
    if ((((m - j) * (n - j)) & 1) != 0) chain[static_cast<std::size_t>(j)] = -chain[static_cast<std::size_t>(j)];
  }
  return chain;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v) {
  const int m = p.degree(v);
  const int n = q.degree(v);
  if (m < 1 || n < 1) throw DegreeError("resultant requires positive degree in the variable");
  if (m >= n) return sign_power(m * n) * psc_chain(p, q, v)[0];
  return psc_chain(q, p, v)[0];
}

Polynomial discriminant(const Polynomial& p, Var v) {
  const int d = p.degree(v);
  if (d < 2) throw DegreeError("discriminant requires degree >= 2");
  Polynomial r = resultant(p, p.derivative(v), v);
  return sign_power(d * (d - 1) / 2) * exact(r, p.leading_coeff(v));
}

std::vector<Polynomial> zero_set_components(const Polynomial& p) {
  if (p.is_constant()) return {};
  const Var v = p.main_var();
  auto [content, pp] = content_primitive(p, v);
  Polynomial g = gcd(pp, pp.derivative(v));
  if (!g.is_constant()) pp = normalize_unit(exact(pp, g));
  std::vector<Polynomial> out{std::move(pp)};
  for (auto& c : zero_set_components(content)) out.push_back(std::move(c));
  return out;
}

}  // namespace cadec
