#include <random>

#include <gtest/gtest.h>

#include "cadec/infix.hpp"
#include "cadec/realalg.hpp"
#include "oracles.hpp"

namespace cadec {
namespace {

Polynomial P(const char* s) { return parse_infix(s); }

int ord(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

AlgebraicNumber sqrt2() {
  auto roots = isolate_roots(P("x^2-2"));
  return roots.at(1);
}

TEST(Isolate, RationalRootsComeOutExact) {
  auto roots = isolate_roots(P("x^2-1"));
  ASSERT_EQ(roots.size(), 2u);
  ASSERT_TRUE(roots[0].is_rational());
  ASSERT_TRUE(roots[1].is_rational());
  EXPECT_EQ(roots[0].value(), -1);
  EXPECT_EQ(roots[1].value(), 1);

  auto halves = isolate_roots(P("4*x^3-x"));
  ASSERT_EQ(halves.size(), 3u);
  EXPECT_EQ(halves[0].value(), Rational(-1, 2));
  EXPECT_EQ(halves[1].value(), 0);
  EXPECT_EQ(halves[2].value(), Rational(1, 2));
}

TEST(Isolate, IrrationalAndEmpty) {
  auto roots = isolate_roots(P("x^2-2"));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_FALSE(roots[1].is_rational());
  EXPECT_LT(roots[1].lo(), roots[1].hi());
  EXPECT_NEAR(roots[1].approx(), 1.41421356, 1.0);
  EXPECT_TRUE(isolate_roots(P("x^2+1")).empty());
  EXPECT_THROW(isolate_roots(Polynomial{}), std::domain_error);
  // a polynomial in y is treated as univariate
  EXPECT_EQ(isolate_roots(P("y^3-y")).size(), 3u);
}

TEST(Isolate, RepeatedRootsCountedOnce) {
  auto roots = isolate_roots(P("(x-1)^3*(x^2-3)^2"));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(roots[1].is_rational());
}

TEST(Isolate, AgreesWithSturmCount) {
  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    auto p = oracle::random_poly(rng, 1, 7, 12, 5);
    if (p.degree(0) < 1) continue;
    auto roots = isolate_roots(p);
    EXPECT_EQ(static_cast<int>(roots.size()), oracle::sturm_root_count(p)) << p.to_string();
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) EXPECT_LT(ord(compare(roots[k], roots[k + 1])), 0) << p.to_string();
    for (auto& r : roots) {
      if (r.is_rational()) {
        EXPECT_EQ(p.substitute(0, r.value()), Polynomial{});
      } else {
        int a = sgn(p.substitute(0, r.lo()).constant_value());
        int b = sgn(p.substitute(0, r.hi()).constant_value());
        EXPECT_EQ(a * b, -1);
      }
    }
  }
}

TEST(Refine, SqrtTwoToAThousandth) {
  auto r = sqrt2();
  refine(r, Rational(1, 1000));
  EXPECT_LE(r.hi() - r.lo(), Rational(1, 1000));
  EXPECT_LT(r.lo() * r.lo(), 2);
  EXPECT_GT(r.hi() * r.hi(), 2);
}

TEST(Compare, Examples) {
  auto r = sqrt2();
  SamplePoint empty;
  EXPECT_LT(ord(compare(r, Rational(3, 2), empty)), 0);
  EXPECT_GT(ord(compare(r, Rational(7, 5), empty)), 0);
  auto quartic = isolate_roots(P("x^4-4"));
  ASSERT_EQ(quartic.size(), 2u);
  auto s = sqrt2();
  EXPECT_EQ(ord(compare(s, quartic[1])), 0);
  EXPECT_GT(ord(compare(s, quartic[0])), 0);
  auto cube = isolate_roots(P("x^3-3"));
  EXPECT_LT(ord(compare(s, cube[0])), 0);
}

TEST(Compare, TotalOrderOnMixedRoots) {
  std::vector<AlgebraicNumber> all;
  for (const char* p : {"x^2-2", "x^2-3", "x^4-4", "x^3-2", "2*x-3", "x^2-x-1"})
    for (auto& r : isolate_roots(P(p))) all.push_back(r);
  for (auto& a : all)
    for (auto& b : all) {
      int ab = ord(compare(a, b));
      int ba = ord(compare(b, a));
      EXPECT_EQ(ab, -ba);
      // roots in the list differ by far more than 1e-3
      double d = a.approx() - b.approx();
      EXPECT_EQ(ab, d < -1e-3 ? -1 : (d > 1e-3 ? 1 : 0));
    }
}

TEST(SignAt, Examples) {
  SamplePoint s({sqrt2()});
  EXPECT_EQ(sign_at(P("x^2-2"), s), 0);
  EXPECT_EQ(sign_at(P("x-1"), s), 1);
  EXPECT_EQ(sign_at(P("x^3-2*x"), s), 0);
  EXPECT_EQ(sign_at(P("3-2*x"), s), 1);
  EXPECT_EQ(sign_at(P("x^4-4"), s), 0);
  EXPECT_EQ(sign_at(P("x^4-5"), s), -1);
}

TEST(SignAt, TwoLevelTower) {
  // x = sqrt 2, y = 2^(1/4)
  SamplePoint s({sqrt2()});
  auto ys = substitute_partial(P("y^2-x"), s);
  ASSERT_EQ(ys.roots.size(), 2u);
  SamplePoint t = s.extended(ys.roots[1]);
  EXPECT_EQ(sign_at(P("y^4-2"), t), 0);
  EXPECT_EQ(sign_at(P("y^2-x"), t), 0);
  EXPECT_EQ(sign_at(P("y-x"), t), -1);
  EXPECT_EQ(sign_at(P("x*y^2-2"), t), 0);
  EXPECT_EQ(sign_at(P("y^8-4+x"), t), 1);
  auto u = univariate_form(t, 1);
  EXPECT_EQ(u.var(), 0);
  SamplePoint flat({u});
  EXPECT_EQ(sign_at(P("x^4-2"), flat), 0);
  EXPECT_EQ(sign_at(P("x-1"), flat), 1);
}

TEST(SubstitutePartial, Examples) {
  SamplePoint origin({AlgebraicNumber::rational(0, 0), AlgebraicNumber::rational(1, 0)});
  EXPECT_TRUE(substitute_partial(P("x*z+y"), origin).nullified);
  SamplePoint other({AlgebraicNumber::rational(0, 1), AlgebraicNumber::rational(1, 0)});
  auto r = substitute_partial(P("x*z+y"), other);
  EXPECT_FALSE(r.nullified);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].value(), 0);

  SamplePoint s({sqrt2()});
  auto ys = substitute_partial(P("y^2-x"), s);
  EXPECT_FALSE(ys.nullified);
  EXPECT_EQ(ys.roots.size(), 2u);

  // (x^2-2)*y + 1 has leading coefficient vanishing at sqrt 2: no roots
  auto deg0 = substitute_partial(P("(x^2-2)*y+1"), s);
  EXPECT_FALSE(deg0.nullified);
  EXPECT_TRUE(deg0.roots.empty());
  // (x^2-2)*y^2 + y - x: one root y = sqrt 2
  auto lin = substitute_partial(P("(x^2-2)*y^2+y-x"), s);
  ASSERT_EQ(lin.roots.size(), 1u);
  SamplePoint t = s.extended(lin.roots[0]);
  EXPECT_EQ(sign_at(P("y-x"), t), 0);
  // square of a tower-dependent factor
  auto sq = substitute_partial(P("(y^2-x)^2*(y-1)"), s);
  EXPECT_EQ(sq.roots.size(), 3u);
  EXPECT_TRUE(substitute_partial(P("(x^2-2)*y"), s).nullified);
}

TEST(SubstitutePartial, MatchesRationalSubstitution) {
  // over rational points the tower path must agree with plain substitution
  std::mt19937 rng(17);
  for (int i = 0; i < 80; ++i) {
    auto p = oracle::random_poly(rng, 2, 4, 6, 5);
    if (p.degree(1) < 1) continue;
    Rational x(static_cast<long>(rng() % 7) - 3, 2);
    SamplePoint s({AlgebraicNumber::rational(0, x)});
    auto q = p.substitute(0, x);
    auto res = substitute_partial(p, s);
    if (q.is_zero()) {
      EXPECT_TRUE(res.nullified);
      continue;
    }
    int direct = q.degree(1) < 1 ? 0 : static_cast<int>(isolate_roots(q).size());
    EXPECT_EQ(static_cast<int>(res.roots.size()), direct);
  }
}

TEST(RationalBetween, PrefersSimpleValues) {
  auto roots = isolate_roots(P("x^2-2"));
  SamplePoint empty;
  EXPECT_EQ(rational_between(roots[0], roots[1], empty), 0);
  auto a = isolate_roots(P("x^2-2"))[1];
  auto b = isolate_roots(P("x^2-3"))[1];
  Rational m = rational_between(a, b, empty);
  EXPECT_EQ(m, Rational(3, 2));
  auto one = AlgebraicNumber::rational(0, 1);
  auto two = AlgebraicNumber::rational(0, 2);
  EXPECT_EQ(rational_between(one, two, empty), Rational(3, 2));
  EXPECT_EQ(rational_below(one), 0);
  EXPECT_EQ(rational_above(one), 2);
  EXPECT_LT(rational_below(a) * rational_below(a), 2);
}

TEST(RationalBetween, SharedNonDyadicEndpoint) {
  // isolating intervals (1, 4/3) and (4/3, 3/2) touch at a point no dyadic reaches
  AlgebraicNumber a(0, P("2*x^2-3"), 1, Rational(4, 3), -1);
  AlgebraicNumber b(0, P("x^2-2"), Rational(4, 3), Rational(3, 2), -1);
  SamplePoint empty;
  Rational m = rational_between(a, b, empty);
  EXPECT_TRUE(compare(a, m, empty) < 0);
  EXPECT_TRUE(compare(b, m, empty) > 0);
}

TEST(Decimal, Rendering) {
  EXPECT_EQ(decimal_string(Rational(1, 3), 4, true), "0.3333");
  EXPECT_EQ(decimal_string(Rational(1, 3), 4, false), "0.3334");
  EXPECT_EQ(decimal_string(Rational(-5, 4), 2, true), "-1.25");
  EXPECT_EQ(decimal_string(Rational(-1, 3), 3, true), "-0.334");
  EXPECT_EQ(decimal_string(Rational(7), 0, true), "7");
}

}  // namespace
}  // namespace cadec
