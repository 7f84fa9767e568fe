#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "cadec/infix.hpp"
#include "cadec/lifting.hpp"
#include "cadec/polyalg.hpp"
#include "oracles.hpp"

namespace cadec {
namespace {

Polynomial P(const char* s) { return parse_infix(s); }

LiftSpecPtr spec(Var level, std::vector<Polynomial> polys, Operator op = Operator::mccallum,
                 std::vector<Polynomial> ec = {}) {
  auto s = std::make_shared<LiftSpec>();
  s->level = level;
  for (auto& p : polys) p = normalize_unit(p);
  for (auto& p : ec) p = normalize_unit(p);
  std::sort(polys.begin(), polys.end());
  std::sort(ec.begin(), ec.end());
  s->polys = polys;
  s->op = op;
  s->ec_parts = ec;
  s->origins.assign(polys.size(), IdSet{0});
  return s;
}

Cell point_cell(std::vector<int> index, std::vector<Rational> coords) {
  Cell c;
  c.index = std::move(index);
  for (std::size_t i = 0; i < coords.size(); ++i) c.sample.push_back(AlgebraicNumber::rational(static_cast<Var>(i), coords[i]));
  return c;
}

TEST(CellDimension, Examples) {
  EXPECT_EQ(cell_dimension({1, 1}), 2);
  EXPECT_EQ(cell_dimension({2, 2}), 0);
  EXPECT_EQ(cell_dimension({2, 1}), 1);
}

TEST(LiftCell, CircleOverOrigin) {
  Budget budget;
  LiftStats stats;
  Cell base = point_cell({3}, {0});
  auto r = lift_cell(base, *spec(1, {P("x^2+y^2-1")}), budget, stats);
  ASSERT_FALSE(r.nullification);
  ASSERT_EQ(r.cells.size(), 5u);
  EXPECT_EQ(r.cells[1].sample[1].value(), -1);
  EXPECT_EQ(r.cells[3].sample[1].value(), 1);
  EXPECT_EQ(r.cells[2].sample[1].value(), 0);
  EXPECT_LT(r.cells[0].sample[1].value(), -1);
  EXPECT_GT(r.cells[4].sample[1].value(), 1);
  EXPECT_EQ(r.cells[2].index, (std::vector<int>{3, 3}));
}

TEST(LiftCell, NullificationOnPositiveDimensionalCell) {
  // variables w < x < y < z; the base cell has w free (sector) and x = y = 0
  std::vector<std::string> names{"w", "x", "y", "z"};
  Polynomial f = parse_infix("x*z+y", names);
  Budget budget;
  LiftStats stats;
  Cell base = point_cell({1, 2, 2}, {0, 0, 0});
  auto r = lift_cell(base, *spec(3, {f}), budget, stats);
  ASSERT_TRUE(r.nullification);
  EXPECT_EQ(r.nullification->cell_dimension, 1);
  EXPECT_EQ(r.nullification->level, 3);
  EXPECT_EQ(r.nullification->polynomial, f);
  // the same point as a 0-dimensional cell is tolerated, and collins never reports
  Cell point = point_cell({2, 2, 2}, {0, 0, 0});
  EXPECT_FALSE(lift_cell(point, *spec(3, {f}), budget, stats).nullification);
  EXPECT_FALSE(lift_cell(base, *spec(3, {f}, Operator::collins), budget, stats).nullification);
  EXPECT_EQ(lift_cell(base, *spec(3, {f}, Operator::collins), budget, stats).cells.size(), 1u);
}

TEST(LiftCell, ReducedIgnoresOtherRoots) {
  Budget budget;
  LiftStats stats;
  Cell base = point_cell({3}, {0});
  auto full = lift_cell(base, *spec(1, {P("x^2+y^2-1"), P("x+y")}), budget, stats);
  EXPECT_EQ(full.cells.size(), 7u);
  auto red = lift_cell(base, *spec(1, {P("x^2+y^2-1"), P("x+y")}, Operator::reduced, {P("x^2+y^2-1")}), budget, stats);
  ASSERT_EQ(red.cells.size(), 5u);
  for (const auto& c : red.cells) EXPECT_EQ(c.pruned, !c.is_section());
  for (auto& c : red.cells)
    if (c.is_section()) EXPECT_EQ(sign_at(P("x^2+y^2-1"), c.sample), 0);
}

TEST(LiftCell, ReducedFallsBackWhenEcVanishesOverPoint) {
  Budget budget;
  LiftStats stats;
  Cell base = point_cell({2}, {0});
  auto r = lift_cell(base, *spec(1, {P("x*y"), P("y-1")}, Operator::reduced, {P("x*y")}), budget, stats);
  ASSERT_FALSE(r.nullification);
  EXPECT_EQ(r.cells.size(), 3u);
  for (const auto& c : r.cells) EXPECT_FALSE(c.pruned);
}

TEST(LiftCell, BudgetCap) {
  Budget budget;
  budget.cell_cap = 3;
  LiftStats stats;
  Cell base = point_cell({}, {});
  EXPECT_THROW(lift_cell(base, *spec(0, {P("x^3-x")}), budget, stats), BudgetExceeded);
}

/// Every sector sample lies strictly between its neighbours and each
/// polynomial keeps its sign at extra probes inside the sector.
void check_stack(Cell& base, const std::vector<Polynomial>& polys) {
  auto& cells = base.children;
  const Var v = static_cast<Var>(base.level());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    EXPECT_EQ(cells[i].is_section(), i % 2 == 1);
    if (i + 1 < cells.size()) {
      auto a = cells[i].sample[v];
      auto b = cells[i + 1].sample[v];
      EXPECT_TRUE(compare(a, b, base.sample) < 0);
    }
    if (cells[i].is_section()) continue;
    std::vector<Rational> probes;
    Rational s = cells[i].sample[v].value();
    Rational lo = s - 1, hi = s + 1;
    if (i > 0) {
      auto a = cells[i - 1].sample[v];
      refine(a, Rational(1, 1 << 20), base.sample);
      lo = a.hi();
    }
    if (i + 1 < cells.size()) {
      auto b = cells[i + 1].sample[v];
      refine(b, Rational(1, 1 << 20), base.sample);
      hi = b.lo();
    }
    probes.push_back(lo + (s - lo) / 3);
    probes.push_back(s + (hi - s) / 3);
    for (const auto& p : polys) {
      int at = sign_at(p, cells[i].sample);
      for (const auto& q : probes) {
        SamplePoint probe = base.sample.extended(AlgebraicNumber::rational(v, q));
        EXPECT_EQ(sign_at(p, probe), at) << p.to_string();
      }
    }
  }
}

TEST(LiftCell, StacksWellFormedAndSignInvariant) {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    std::vector<Polynomial> polys;
    for (int k = 0; k < 2; ++k) {
      auto p = oracle::random_poly(rng, 2, 3, 5, 4) + P("y^2");
      polys.push_back(p);
    }
    ProjectionCache cache;
    std::vector<ProjPoly> in;
    for (auto& p : polys)
      for (auto& c : components(p, {0}, Operator::mccallum, Rule::input)) in.push_back(c);
    std::vector<ProjPoly> top, bottom;
    for (auto& c : in) (c.poly.main_var() == 1 ? top : bottom).push_back(c);
    auto l1 = make_level(1, top, &cache);
    auto pr = project_mccallum(l1, &cache);
    for (auto& c : pr.polys) bottom.push_back(c);
    auto l0 = make_level(0, bottom, &cache);
    std::vector<LiftSpecPtr> specs{spec(0, l0.polynomials()), spec(1, l1.polynomials())};
    Cell root;
    Budget budget;
    LiftStats stats;
    auto report = sync_tree(root, specs, budget, stats);
    if (report) continue;
    check_stack(root, l0.polynomials());
    for (auto& c : root.children) check_stack(c, l1.polynomials());
  }
}

std::vector<std::string> shape(const Cell& c) {
  std::vector<std::string> out;
  for (const auto& ch : c.children) {
    std::string s;
    for (int i : ch.index) s += std::to_string(i) + ".";
    out.push_back(s + (ch.is_section() ? "s" : "o") + std::to_string(ch.children.size()));
    for (auto& x : shape(ch)) out.push_back(x);
  }
  return out;
}

TEST(SyncTree, IncrementalMatchesScratch) {
  Budget budget;
  LiftStats stats;
  auto before = std::vector<LiftSpecPtr>{spec(0, {P("x^2-1")}), spec(1, {P("x^2+y^2-1")})};
  auto after = std::vector<LiftSpecPtr>{spec(0, {P("x^2-1"), P("2*x^2-1")}), spec(1, {P("x^2+y^2-1"), P("x+y")})};
  Cell inc;
  ASSERT_FALSE(sync_tree(inc, before, budget, stats));
  std::size_t created_before = stats.cells_created;
  ASSERT_FALSE(sync_tree(inc, after, budget, stats));
  EXPECT_GT(stats.cells_preserved, 0u);
  Cell scratch;
  LiftStats s2;
  ASSERT_FALSE(sync_tree(scratch, after, budget, s2));
  EXPECT_EQ(shape(inc), shape(scratch));
  EXPECT_LT(stats.cells_created - created_before, s2.cells_created);
  // and back again
  ASSERT_FALSE(sync_tree(inc, before, budget, stats));
  Cell again;
  ASSERT_FALSE(sync_tree(again, before, budget, s2));
  EXPECT_EQ(shape(inc), shape(again));
}

}  // namespace
}  // namespace cadec
