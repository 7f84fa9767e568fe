#include "cadec/realalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cadec/polyalg.hpp"

namespace cadec {

namespace {

constexpr int kIntervalRounds = 6;
constexpr int kRefinementCap = 20000;

Rational abs_q(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

Rational qpow(const Rational& base, unsigned e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

Interval ipow(const Interval& x, unsigned k) {
  if (k == 0) return {1, 1};
  if (sgn(x.lo) >= 0) return {qpow(x.lo, k), qpow(x.hi, k)};
  if (sgn(x.hi) <= 0) {
    if (k % 2 == 0) return {qpow(x.hi, k), qpow(x.lo, k)};
    return {qpow(x.lo, k), qpow(x.hi, k)};
  }
  if (k % 2 == 0) return {0, std::max(qpow(x.lo, k), qpow(x.hi, k))};
  return {qpow(x.lo, k), qpow(x.hi, k)};
}

Interval imul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Integer floor_q(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil_q(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

void refine_variables(const Polynomial& p, SamplePoint& s) {
  std::uint32_t mask = p.variables();
  for (std::size_t i = 0; i < s.size(); ++i)
    if ((mask >> i) & 1u) s.refine_coordinate(i);
}

Polynomial rename_to(const Polynomial& p, Var from, Var to) {
  if (from == to) return p;
  std::vector<Polynomial::Term> terms;
  for (auto t : p.terms()) {
    auto e = t.mono[from];
    t.mono[from] = 0;
    t.mono[to] = e;
    terms.push_back(std::move(t));
  }
  return Polynomial::from_terms(std::move(terms));
}

/// One bisection step of a over the coordinates of base below a.var().
void bisect(AlgebraicNumber& a, SamplePoint& base);

// ---------------------------------------------------------------------------
// Descartes bisection with coefficients either rational (T = Rational) or
// polynomials in the coordinates below (T = Polynomial).

struct IsolatedRoot {
  Rational lo;
  Rational hi;
  bool exact = false;
};

Rational scale(const Rational& a, const Rational& b) { return a * b; }
Polynomial scale(const Polynomial& a, const Rational& b) { return a * b; }

template <class T>
std::vector<T> interval_transform(const std::vector<T>& c, const Rational& a, const Rational& b) {
  // coefficients (ascending) of (x+1)^d * u((a*x + b)/(x+1)), whose positive
  // roots correspond to the roots of u in (a, b)
  const std::size_t d = c.size() - 1;
  const Rational h = b - a;
  std::vector<T> acc{c[d]};
  for (std::size_t i = d; i-- > 0;) {
    std::vector<T> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += scale(acc[k], a);
      next[k + 1] += scale(acc[k], h);
    }
    next[0] += c[i];
    acc = std::move(next);
  }
  std::reverse(acc.begin(), acc.end());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = d; j-- > i;) acc[j] += acc[j + 1];
  return acc;
}

template <class T>
T evaluate_at(const std::vector<T>& c, const Rational& x) {
  T acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = scale(acc, x);
    acc += c[i];
  }
  return acc;
}

template <class T, class SignFn>
int variations(const std::vector<T>& c, SignFn&& sign) {
  int count = 0;
  int last = 0;
  for (const auto& x : c) {
    int s = sign(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

template <class T, class SignFn>
std::vector<IsolatedRoot> descartes(const std::vector<T>& c, const Rational& bound, SignFn&& sign) {
  std::vector<IsolatedRoot> out;
  std::vector<std::pair<Rational, Rational>> todo{{-bound, bound}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    int v = variations(interval_transform(c, a, b), sign);
    if (v == 0) continue;
    // an endpoint may be a root found earlier at a midpoint; keep bisecting
    // until the isolating interval stays clear of it
    if (v == 1 && sign(evaluate_at(c, a)) != 0 && sign(evaluate_at(c, b)) != 0) {
      out.push_back({a, b, false});
      continue;
    }
    Rational m = (a + b) / 2;
    if (sign(evaluate_at(c, m)) == 0) out.push_back({m, m, true});
    todo.emplace_back(a, m);
    todo.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

Rational power_of_two_at_least(const Rational& x) {
  Rational b = 1;
  while (b < x) b *= 2;
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------

AlgebraicNumber AlgebraicNumber::rational(Var v, const Rational& r) {
  AlgebraicNumber a;
  a.var_ = v;
  a.defining_ = std::make_shared<const Polynomial>(Polynomial::variable(v) - Polynomial(r));
  a.lo_ = r;
  a.hi_ = r;
  a.sign_lo_ = 0;
  a.exact_ = true;
  return a;
}

AlgebraicNumber::AlgebraicNumber(Var v, Polynomial defining, Rational lo, Rational hi, int sign_lo)
    : var_(v),
      defining_(std::make_shared<const Polynomial>(std::move(defining))),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      sign_lo_(sign_lo) {
  if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval must satisfy lo < hi");
}

void AlgebraicNumber::make_exact(const Rational& r) {
  lo_ = r;
  hi_ = r;
  exact_ = true;
  defining_ = std::make_shared<const Polynomial>(Polynomial::variable(var_) - Polynomial(r));
  sign_lo_ = 0;
}

double AlgebraicNumber::approx() const { return Rational((lo_ + hi_) / 2).get_d(); }

std::string AlgebraicNumber::to_string(const std::vector<std::string>& names) const {
  if (exact_) return lo_.get_str();
  std::ostringstream os;
  os << "root(" << defining_->to_string(names) << ", " << lo_.get_str() << ", " << hi_.get_str() << ")";
  return os.str();
}

void narrow_to(AlgebraicNumber& a, const Rational& lo, const Rational& hi) {
  a.lo_ = lo;
  a.hi_ = hi;
}

SamplePoint::SamplePoint(std::vector<AlgebraicNumber> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].var() != static_cast<Var>(i)) throw std::invalid_argument("coordinate variable mismatch");
}

void SamplePoint::push_back(AlgebraicNumber a) {
  if (a.var() != static_cast<Var>(coords_.size())) throw std::invalid_argument("coordinate variable mismatch");
  coords_.push_back(std::move(a));
}

SamplePoint SamplePoint::extended(AlgebraicNumber a) const {
  SamplePoint out = *this;
  out.push_back(std::move(a));
  return out;
}

SamplePoint SamplePoint::prefix(std::size_t k) const {
  SamplePoint out;
  out.coords_.assign(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(std::min(k, coords_.size())));
  return out;
}

void SamplePoint::refine_coordinate(std::size_t i) {
  if (coords_[i].is_rational()) return;
  bisect(coords_[i], *this);
}

std::string SamplePoint::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    if (coords_[i].is_rational())
      os << coords_[i].value().get_str();
    else
      os << "~" << coords_[i].approx();
  }
  os << ")";
  (void)names;
  return os.str();
}

namespace {

void bisect(AlgebraicNumber& a, SamplePoint& base) {
  if (a.is_rational()) return;
  const Var v = a.var();
  Rational mid = (a.lo() + a.hi()) / 2;
  int s = sign_at(a.defining().substitute(v, mid), base);
  if (s == 0) {
    a = AlgebraicNumber::rational(v, mid);
  } else if (s == a.sign_at_lo()) {
    narrow_to(a, mid, a.hi());
  } else {
    narrow_to(a, a.lo(), mid);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Interval enclose(const Polynomial& p, const SamplePoint& s) {
  Interval acc{0, 0};
  for (const auto& t : p.terms()) {
    Interval term{t.coeff, t.coeff};
    for (int v = 0; v < kMaxVars; ++v) {
      auto e = t.mono[v];
      if (e == 0) continue;
      if (static_cast<std::size_t>(v) >= s.size()) throw std::invalid_argument("polynomial variable beyond sample point");
      const auto& c = s[static_cast<std::size_t>(v)];
      term = imul(term, ipow(c.interval(), e));
    }
    acc.lo += term.lo;
    acc.hi += term.hi;
  }
  return acc;
}

Polynomial substitute_rational_coords(const Polynomial& p, const SamplePoint& s) {
  Polynomial q = p;
  std::uint32_t mask = p.variables();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (((mask >> i) & 1u) && s[i].is_rational()) q = q.substitute(static_cast<Var>(i), s[i].value());
  return q;
}

int sign_nonzero(const Polynomial& p, SamplePoint& s) {
  Polynomial q = substitute_rational_coords(p, s);
  for (int round = 0; round < kRefinementCap; ++round) {
    if (q.is_constant()) {
      int sg = sgn(q.constant_value());
      if (sg == 0) throw std::logic_error("sign_nonzero on a vanishing polynomial");
      return sg;
    }
    Interval iv = enclose(q, s);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    refine_variables(q, s);
    q = substitute_rational_coords(q, s);
  }
  throw std::logic_error("sign_nonzero did not converge");
}

int sign_at(const Polynomial& p, SamplePoint& s) {
  Polynomial q = substitute_rational_coords(p, s);
  for (int round = 0; round < kIntervalRounds; ++round) {
    if (q.is_constant()) return sgn(q.constant_value());
    Interval iv = enclose(q, s);
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    refine_variables(q, s);
    q = substitute_rational_coords(q, s);
  }
  if (vanishes_at(q, s)) return 0;
  return sign_nonzero(q, s);
}

bool vanishes_at(const Polynomial& p, SamplePoint& s) {
  Polynomial q = substitute_rational_coords(p, s);
  if (q.is_constant()) return q.is_zero();
  if (!enclose(q, s).contains_zero()) return false;
  const Var m = q.main_var();
  if (static_cast<std::size_t>(m) >= s.size()) throw std::invalid_argument("polynomial variable beyond sample point");
  AlgebraicNumber& c = s[static_cast<std::size_t>(m)];
  Polynomial defining = substitute_rational_coords(c.defining(), s);
  Polynomial g = tower_gcd(q, defining, s, m);
  if (g.degree(m) <= 0) return false;
  // c may have been refined (even made exact) during the gcd
  if (c.is_rational()) return vanishes_at(q, s);
  int slo = sign_at(g.substitute(m, c.lo()), s);
  int shi = sign_at(g.substitute(m, c.hi()), s);
  if (slo == 0 || shi == 0) throw std::logic_error("gcd vanishes at an isolating endpoint");
  return slo != shi;
}

Polynomial trim_at(const Polynomial& p, SamplePoint& s, Var v) {
  Polynomial q = p;
  while (!q.is_zero()) {
    const int d = q.degree(v);
    Polynomial lc = q.coeff(v, d);
    if (lc.is_constant()) break;
    if (!vanishes_at(lc, s)) break;
    q -= lc.shift_var(v, static_cast<unsigned>(d));
  }
  return q;
}

Polynomial tower_gcd(const Polynomial& a, const Polynomial& b, SamplePoint& s, Var v) {
  Polynomial A = trim_at(a, s, v);
  Polynomial B = trim_at(b, s, v);
  if (A.is_zero()) return B;
  if (B.is_zero()) return A;
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  while (true) {
    if (B.degree(v) == 0) return Polynomial(1);
    Polynomial R = trim_at(prem(A, B, v), s, v);
    if (R.is_zero()) return B;
    A = std::move(B);
    B = primitive_part(R, v);
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<AlgebraicNumber> isolate_pure(const Polynomial& u, Var v) {
  // u has rational coefficients only
  auto polys = u.coefficients(v);
  std::vector<Rational> c;
  c.reserve(polys.size());
  for (const auto& p : polys) c.push_back(p.constant_value());
  const std::size_t d = c.size() - 1;
  std::vector<AlgebraicNumber> out;
  if (d == 0) return out;
  if (d == 1) {
    out.push_back(AlgebraicNumber::rational(v, -c[0] / c[1]));
    return out;
  }
  Rational mx = 0;
  for (std::size_t i = 0; i < d; ++i) mx = std::max(mx, abs_q(c[i]));
  Rational bound = power_of_two_at_least(1 + mx / abs_q(c[d]));
  auto sign = [](const Rational& x) { return sgn(x); };
  // rational roots p/q have q | lc once coefficients are integral
  Rational lc_int = abs_q(c[d] / rational_content(u));
  for (auto& r : descartes(c, bound, sign)) {
    if (r.exact) {
      out.push_back(AlgebraicNumber::rational(v, r.lo));
      continue;
    }
    int slo = sgn(evaluate_at(c, r.lo));
    Rational lo = r.lo, hi = r.hi;
    while (Rational(hi - lo) * lc_int >= 1) {
      Rational m = (lo + hi) / 2;
      int sm = sgn(evaluate_at(c, m));
      if (sm == 0) {
        lo = hi = m;
        break;
      }
      if (sm == slo) lo = m; else hi = m;
    }
    if (lo == hi) {
      out.push_back(AlgebraicNumber::rational(v, lo));
      continue;
    }
    Integer k = floor_q(lo * lc_int) + 1;
    Rational cand(k, lc_int.get_num());
    cand.canonicalize();
    if (cand < hi && sgn(evaluate_at(c, cand)) == 0) {
      out.push_back(AlgebraicNumber::rational(v, cand));
    } else {
      out.emplace_back(v, u, r.lo, r.hi, slo);
    }
  }
  return out;
}

std::vector<AlgebraicNumber> isolate_tower(const Polynomial& u, SamplePoint& s, Var v) {
  auto c = u.coefficients(v);
  const std::size_t d = c.size() - 1;
  std::vector<AlgebraicNumber> out;
  if (d == 0) return out;
  auto sign = [&s](const Polynomial& x) { return sign_at(x, s); };
  sign_nonzero(c[d], s);
  Interval lead = enclose(c[d], s);
  Rational lead_min = std::min(abs_q(lead.lo), abs_q(lead.hi));
  Rational mx = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Interval e = enclose(c[i], s);
    mx = std::max({mx, abs_q(e.lo), abs_q(e.hi)});
  }
  Rational bound = power_of_two_at_least(1 + mx / lead_min);
  for (auto& r : descartes(c, bound, sign)) {
    if (r.exact) {
      out.push_back(AlgebraicNumber::rational(v, r.lo));
    } else {
      int slo = sign_nonzero(evaluate_at(c, r.lo), s);
      out.emplace_back(v, u, r.lo, r.hi, slo);
    }
  }
  return out;
}

}  // namespace

RootIsolation substitute_partial(const Polynomial& p, SamplePoint& s) {
  const Var v = static_cast<Var>(s.size());
  RootIsolation result;
  Polynomial q = substitute_rational_coords(p, s);
  if (q.degree(v) <= 0) {
    result.nullified = vanishes_at(q, s);
    return result;
  }
  Polynomial u = trim_at(q, s, v);
  if (u.is_zero()) {
    result.nullified = true;
    return result;
  }
  if (u.degree(v) == 0) return result;
  Polynomial g = tower_gcd(u, u.derivative(v), s, v);
  if (g.degree(v) > 0) u = pseudo_divide(u, g, v).first;
  u = primitive_part(u, v);
  result.squarefree = u;
  bool pure = true;
  for (const auto& c : u.coefficients(v))
    if (!c.is_constant()) pure = false;
  result.roots = pure ? isolate_pure(u, v) : isolate_tower(u, s, v);
  return result;
}

std::vector<AlgebraicNumber> isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("isolate_roots of the zero polynomial");
  std::uint32_t mask = p.variables();
  if (mask == 0) return {};
  if ((mask & (mask - 1)) != 0) throw std::invalid_argument("isolate_roots expects a univariate polynomial");
  Var w = 0;
  while (((mask >> w) & 1u) == 0) ++w;
  SamplePoint empty;
  return substitute_partial(rename_to(p, w, 0), empty).roots;
}

// ---------------------------------------------------------------------------

std::strong_ordering compare(AlgebraicNumber& a, const Rational& r, SamplePoint& base) {
  if (a.is_rational()) return cmp(a.value(), r) <=> 0;
  if (r <= a.lo()) return std::strong_ordering::greater;
  if (r >= a.hi()) return std::strong_ordering::less;
  int s = sign_at(a.defining().substitute(a.var(), r), base);
  if (s == 0) {
    a = AlgebraicNumber::rational(a.var(), r);
    return std::strong_ordering::equal;
  }
  if (s == a.sign_at_lo()) {
    narrow_to(a, r, a.hi());
    return std::strong_ordering::greater;
  }
  narrow_to(a, a.lo(), r);
  return std::strong_ordering::less;
}

std::strong_ordering compare(AlgebraicNumber& a, AlgebraicNumber& b, SamplePoint& base) {
  if (a.var() != b.var() || static_cast<std::size_t>(a.var()) != base.size())
    throw std::invalid_argument("compare: numbers must be coordinates of the same variable over base");
  if (b.is_rational()) return compare(a, b.value(), base);
  if (a.is_rational()) return 0 <=> compare(b, a.value(), base);
  bool equality_ruled_out = false;
  for (int round = 0; round < kRefinementCap; ++round) {
    if (a.is_rational()) return 0 <=> compare(b, a.value(), base);
    if (b.is_rational()) return compare(a, b.value(), base);
    if (a.hi() <= b.lo()) return std::strong_ordering::less;
    if (b.hi() <= a.lo()) return std::strong_ordering::greater;
    if (!equality_ruled_out) {
      SamplePoint at_a = base.extended(a);
      if (vanishes_at(b.defining(), at_a)) {
        // a is a root of b's defining polynomial; it equals b iff it lies in b's interval
        a = at_a[base.size()];
        for (int k = 0; k < kRefinementCap; ++k) {
          if (a.is_rational()) return 0 <=> compare(b, a.value(), base);
          if (a.lo() >= b.lo() && a.hi() <= b.hi()) return std::strong_ordering::equal;
          if (a.hi() <= b.lo()) return std::strong_ordering::less;
          if (b.hi() <= a.lo()) return std::strong_ordering::greater;
          bisect(a, base);
        }
        throw std::logic_error("compare did not converge");
      }
      equality_ruled_out = true;
    }
    bisect(a, base);
    bisect(b, base);
  }
  throw std::logic_error("compare did not converge");
}

std::strong_ordering compare(AlgebraicNumber& a, AlgebraicNumber& b) {
  SamplePoint empty;
  return compare(a, b, empty);
}

void refine(AlgebraicNumber& a, const Rational& width, SamplePoint& base) {
  while (!a.is_rational() && a.hi() - a.lo() > width) bisect(a, base);
}

void refine(AlgebraicNumber& a, const Rational& width) {
  SamplePoint empty;
  refine(a, width, empty);
}

namespace {

bool admissible(const Rational& r, const Rational& lo, bool open_lo, const Rational& hi, bool open_hi) {
  bool above = open_lo ? r > lo : r >= lo;
  bool below = open_hi ? r < hi : r <= hi;
  return above && below;
}

Rational simplest_dyadic(const Rational& lo, bool open_lo, const Rational& hi, bool open_hi) {
  if (admissible(0, lo, open_lo, hi, open_hi)) return 0;
  if (lo == hi) return lo;
  for (Rational scale = 1;; scale *= 2) {
    Rational cand;
    if (sgn(lo) >= 0) {
      Integer n = ceil_q(lo * scale);
      cand = Rational(n) / scale;
      if (!admissible(cand, lo, open_lo, hi, open_hi)) cand = Rational(n + 1) / scale;
    } else {
      Integer n = floor_q(hi * scale);
      cand = Rational(n) / scale;
      if (!admissible(cand, lo, open_lo, hi, open_hi)) cand = Rational(n - 1) / scale;
    }
    if (admissible(cand, lo, open_lo, hi, open_hi)) return cand;
  }
}

}  // namespace

Rational rational_between(AlgebraicNumber& a, AlgebraicNumber& b, SamplePoint& base) {
  for (int round = 0; round < kRefinementCap; ++round) {
    const Rational& lo = a.hi();
    const Rational& hi = b.lo();
    bool open_lo = a.is_rational();
    bool open_hi = b.is_rational();
    if (lo < hi || (lo == hi && !open_lo && !open_hi)) return simplest_dyadic(lo, open_lo, hi, open_hi);
    bisect(a, base);
    bisect(b, base);
  }
  throw std::logic_error("rational_between: numbers not separated");
}

Rational rational_below(const AlgebraicNumber& a) {
  if (a.is_rational()) return Rational(ceil_q(a.value()) - 1);
  return Rational(floor_q(a.lo()));
}

Rational rational_above(const AlgebraicNumber& a) {
  if (a.is_rational()) return Rational(floor_q(a.value()) + 1);
  return Rational(ceil_q(a.hi()));
}

AlgebraicNumber univariate_form(SamplePoint& s, std::size_t i) {
  AlgebraicNumber& c = s[i];
  const Var v = static_cast<Var>(i);
  if (c.is_rational()) return AlgebraicNumber::rational(0, c.value());
  Polynomial r = substitute_rational_coords(c.defining(), s);
  for (std::size_t j = i; j-- > 0;) {
    if (r.degree(static_cast<Var>(j)) <= 0) continue;
    const auto& cj = s[j];
    if (cj.is_rational()) {
      r = r.substitute(static_cast<Var>(j), cj.value());
      continue;
    }
    Polynomial next = resultant(r, cj.defining(), static_cast<Var>(j));
    if (next.is_zero()) throw std::runtime_error("univariate_form: degenerate elimination");
    r = std::move(next);
  }
  Polynomial univariate = squarefree_part(r, v);
  SamplePoint base = s.prefix(i);
  for (auto& root : substitute_partial(univariate, base).roots) {
    // root and c are both coordinates of variable i over base
    if (compare(c, root, base) == 0) {
      if (root.is_rational()) return AlgebraicNumber::rational(0, root.value());
      return AlgebraicNumber(0, rename_to(root.defining(), v, 0), root.lo(), root.hi(), root.sign_at_lo());
    }
  }
  throw std::logic_error("univariate_form: coordinate not found among roots");
}

std::string decimal_string(const Rational& r, int digits, bool floor) {
  Integer scale_factor;
  mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = r * scale_factor;
  Integer n = floor ? floor_q(scaled) : ceil_q(scaled);
  bool neg = sgn(n) < 0;
  if (neg) n = -n;
  std::string s = n.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return neg ? "-" + s : s;
}

}  // namespace cadec
