#include "cadec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cadec {

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Var Monomial::top_var() const {
  for (int v = kMaxVars - 1; v >= 0; --v)
    if (exp[static_cast<std::size_t>(v)] != 0) return v;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exp.size(); ++i) {
    unsigned s = unsigned{a.exp[i]} + unsigned{b.exp[i]};
    if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  for (int v = kMaxVars - 1; v >= 0; --v) {
    auto i = static_cast<std::size_t>(v);
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void sort_and_combine(std::vector<Polynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.mono > y.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (sgn(c) != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a, const std::vector<Polynomial::Term>& b,
                                    bool negate_b) {
  std::vector<Polynomial::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      r.push_back({b[j].mono, negate_b ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Var v, unsigned power) {
  if (v < 0 || v >= kMaxVars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m[v] = static_cast<std::uint16_t>(power);
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  sort_and_combine(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, Var v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& t : coeffs[i].terms_) {
      Term nt = t;
      nt.mono[v] = static_cast<std::uint16_t>(nt.mono[v] + i);
      terms.push_back(std::move(nt));
    }
  }
  return from_terms(std::move(terms));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!terms_.back().mono.is_one()) return 0;
  return terms_.back().coeff;
}

Var Polynomial::main_var() const { return terms_.empty() ? -1 : terms_.front().mono.top_var(); }

int Polynomial::degree(Var v) const {
  if (terms_.empty()) return kDegreeOfZero;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int{t.mono[v]});
  return d;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint32_t Polynomial::variables() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (int v = 0; v < kMaxVars; ++v)
      if (t.mono[v] != 0) mask |= (1u << v);
  return mask;
}

std::vector<Polynomial> Polynomial::coefficients(Var v) const {
  int d = degree(v);
  if (d < 0) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : terms_) {
    Term nt = t;
    auto k = nt.mono[v];
    nt.mono[v] = 0;
    buckets[k].push_back(std::move(nt));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Polynomial p;
    // removing v keeps the relative order except when v is not the top variable
    if (!std::is_sorted(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.mono > y.mono; }))
      sort_and_combine(b);
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial Polynomial::coeff(Var v, int k) const {
  std::vector<Term> b;
  for (const auto& t : terms_) {
    if (t.mono[v] == k) {
      Term nt = t;
      nt.mono[v] = 0;
      b.push_back(std::move(nt));
    }
  }
  return from_terms(std::move(b));
}

Polynomial Polynomial::leading_coeff(Var v) const {
  if (terms_.empty()) return {};
  return coeff(v, degree(v));
}

Polynomial Polynomial::reductum(Var v) const {
  if (terms_.empty()) return {};
  int d = degree(v);
  Polynomial r;
  for (const auto& t : terms_)
    if (t.mono[v] != d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[v] == 0) continue;
    Term nt = t;
    nt.coeff *= t.mono[v];
    nt.mono[v] = static_cast<std::uint16_t>(nt.mono[v] - 1);
    out.push_back(std::move(nt));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(Var v, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt = t;
    auto e = nt.mono[v];
    if (e != 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      pw.canonicalize();
      nt.coeff *= pw;
      nt.mono[v] = 0;
    }
    out.push_back(std::move(nt));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::compose_linear(Var v, const Rational& a, const Rational& b) const {
  auto cs = coefficients(v);
  if (cs.empty()) return {};
  Polynomial lin = Polynomial(a) + Polynomial::variable(v) * b;
  // Horner in v
  Polynomial acc = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = acc * lin + cs[i];
  return acc;
}

Polynomial Polynomial::shift_var(Var v, unsigned k) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono[v] = static_cast<std::uint16_t>(t.mono[v] + k);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coeff;
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coeff;
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return Polynomial::from_terms(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
    int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

int Polynomial::leading_sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

std::string default_var_name(Var v) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  if (v >= 0 && v < 4) return kNames[v];
  return "x" + std::to_string(v);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = t.mono.is_one();
    if (unit || c != 1) {
      os << c.get_str();
      if (!unit) os << "*";
    }
    bool first_factor = true;
    for (int v = kMaxVars - 1; v >= 0; --v) {
      auto e = t.mono[v];
      if (e == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << (static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)] : default_var_name(v));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Polynomial{};
  const auto& lb = b.leading_term();
  if (b.size() == 1) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lb.mono, t.coeff / lb.coeff});
    }
    return Polynomial::from_terms(std::move(out));
  }
  Polynomial r = a;
  std::vector<Polynomial::Term> q;
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Polynomial t = Polynomial::monomial(lr.mono / lb.mono, lr.coeff / lb.coeff);
    q.push_back(t.leading_term());
    r -= t * b;
  }
  return Polynomial::from_terms(std::move(q));
}

std::pair<Polynomial, Polynomial> pseudo_divide(const Polynomial& a, const Polynomial& b, Var v) {
  int db = b.degree(v);
  if (db < 0) throw std::domain_error("pseudo-division by zero polynomial");
  int da = a.degree(v);
  if (da < db) return {Polynomial{}, a};
  Polynomial lcb = b.leading_coeff(v);
  Polynomial q;
  Polynomial r = a;
  int e = da - db + 1;
  while (!r.is_zero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    Polynomial t = r.leading_coeff(v).shift_var(v, static_cast<unsigned>(dr - db));
    q = q * lcb + t;
    r = r * lcb - t * b;
    --e;
  }
  if (e > 0) {
    Polynomial f = lcb.pow(static_cast<unsigned>(e));
    q *= f;
    r *= f;
  }
  return {std::move(q), std::move(r)};
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Var v) {
  int db = b.degree(v);
  if (db < 0) throw std::domain_error("pseudo-division by zero polynomial");
  int da = a.degree(v);
  if (da < db) return a;
  Polynomial lcb = b.leading_coeff(v);
  Polynomial r = a;
  int e = da - db + 1;
  while (!r.is_zero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    Polynomial t = r.leading_coeff(v).shift_var(v, static_cast<unsigned>(dr - db));
    r = r * lcb - t * b;
    --e;
  }
  if (e > 0) r *= lcb.pow(static_cast<unsigned>(e));
  return r;
}

}  // namespace cadec
