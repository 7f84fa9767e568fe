#pragma once

// Independent reference implementations used only by the tests. None of these
// call into the algorithms they check.

#include <map>
#include <random>
#include <vector>

#include "cadec/polynomial.hpp"

namespace cadec::oracle {

/// Expand-and-collect polynomial keyed by the plain exponent vector.
using NaivePoly = std::map<std::vector<int>, Rational>;

inline NaivePoly to_naive(const Polynomial& p, int nvars) {
  NaivePoly out;
  for (const auto& t : p.terms()) {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (int v = 0; v < nvars; ++v) e[static_cast<std::size_t>(v)] = t.mono[v];
    out[e] += t.coeff;
  }
  return out;
}

inline void prune(NaivePoly& p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
}

inline NaivePoly naive_add(NaivePoly a, const NaivePoly& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  prune(a);
  return a;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  prune(out);
  return out;
}

/// Random polynomial with `nvars` variables, total degree <= maxdeg,
/// integer coefficients in [-coef, coef].
inline Polynomial random_poly(std::mt19937& rng, int nvars, int maxdeg, int coef, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> cdist(-coef, coef);
  std::vector<Polynomial::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    int budget = std::uniform_int_distribution<int>(0, maxdeg)(rng);
    for (int d = 0; d < budget; ++d) {
      Var v = std::uniform_int_distribution<int>(0, nvars - 1)(rng);
      m[v] = static_cast<std::uint16_t>(m[v] + 1);
    }
    terms.push_back({m, Rational(cdist(rng))});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Determinant by fraction-free Gaussian elimination (Bareiss) over Q[x].
inline Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  Polynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial{};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        m[i][j] = *q;
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Sylvester-matrix resultant in v (standard determinant convention).
inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, Var v) {
  auto fc = f.coefficients(v);
  auto gc = g.coefficients(v);
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<Polynomial>> mat(static_cast<std::size_t>(size),
                                           std::vector<Polynomial>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = fc[static_cast<std::size_t>(i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = gc[static_cast<std::size_t>(i)];
  return bareiss_det(std::move(mat));
}

/// j-th principal subresultant coefficient from its determinant definition.
inline Polynomial determinant_psc(const Polynomial& f, const Polynomial& g, Var v, int j) {
  auto fc = f.coefficients(v);
  auto gc = g.coefficients(v);
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  const int size = m + n - 2 * j;
  auto at = [](const std::vector<Polynomial>& c, int i) { return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : Polynomial{}; };
  std::vector<std::vector<Polynomial>> mat(static_cast<std::size_t>(size),
                                           std::vector<Polynomial>(static_cast<std::size_t>(size)));
  // column c holds the coefficient of x^(m+n-j-1-c)
  for (int r = 0; r < n - j; ++r)
    for (int c = 0; c < size; ++c) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(fc, m - (c - r));
  for (int r = 0; r < m - j; ++r)
    for (int c = 0; c < size; ++c)
      mat[static_cast<std::size_t>(n - j + r)][static_cast<std::size_t>(c)] = at(gc, n - (c - r));
  return bareiss_det(std::move(mat));
}

/// Number of distinct real roots of a univariate (variable 0) polynomial by
/// Sturm's theorem on (-inf, +inf), using signs at infinity.
inline int sturm_root_count(const Polynomial& p) {
  auto to_vec = [](const Polynomial& q) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(q.degree(0), 0)) + 1);
    for (const auto& t : q.terms()) c[t.mono[0]] += t.coeff;
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
  };
  auto rem = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      a.pop_back();
      if (a.empty()) {
        a.push_back(0);
        break;
      }
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
  };
  auto is_zero = [](const std::vector<Rational>& a) { return a.size() == 1 && a[0] == 0; };
  std::vector<std::vector<Rational>> seq{to_vec(p), to_vec(p.derivative(0))};
  while (!is_zero(seq.back()) && seq.back().size() > 1) {
    auto r = rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (is_zero(r)) break;
    seq.push_back(r);
  }
  auto variations = [&](bool at_plus) {
    int count = 0;
    int last = 0;
    for (const auto& s : seq) {
      if (is_zero(s)) continue;
      int sg = sgn(s.back());
      if (!at_plus && ((s.size() - 1) % 2 == 1)) sg = -sg;
      if (sg != 0 && last != 0 && sg != last) ++count;
      if (sg != 0) last = sg;
    }
    return count;
  };
  return variations(false) - variations(true);
}

}  // namespace cadec::oracle
