// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cadec/bench.hpp"
#include "cadec/engine.hpp"
#include "cadec/infix.hpp"
#include "cadec/polyalg.hpp"
#include "instances.hpp"

namespace cadec {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (pass) detail << why;
    pass = false;
  }
};

Formula A(const char* poly, Relation rel, const std::vector<std::string>& names = {}) {
  return Formula::atom(parse_infix(poly, names), rel);
}

Solver make(int nvars, const std::vector<Formula>& fs, Operator policy = Operator::reduced) {
  EngineOptions opt;
  opt.policy = policy;
  Solver s(nvars, opt);
  for (const auto& f : fs) s.add_constraint(f);
  return s;
}

std::vector<std::vector<Polynomial>> sorted_sets(Solver& s) {
  auto sets = s.level_sets();
  for (auto& l : sets) std::sort(l.begin(), l.end());
  return sets;
}

bool witness_valid(const Verdict& v, const std::vector<Formula>& fs) {
  if (v.kind != Verdict::Kind::sat || !v.witness) return false;
  SamplePoint w = *v.witness;
  for (const auto& f : fs)
    if (!f.evaluate([&](const Polynomial& p) { return sign_at(p, w); })) return false;
  return true;
}

BenchFamily size_family(int n, std::uint64_t seed, int instances) {
  BenchFamily f;
  f.vars = 2;
  f.degree = 2;
  f.constraints = n;
  f.ecs = 1;
  f.seed = seed;
  f.instances = instances;
  return f;
}

void projection_size(Outcome& out) {
  int checked = 0;
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto rows = run_bench(size_family(n, seed, 1), {Operator::mccallum, Operator::reduced}, {}, false);
      for (const auto& r : rows) {
        const int got = r.steps.at(0).disc_plus_res();
        const int want = r.op == Operator::reduced ? n : n * (n + 1) / 2;
        if (got != want) {
          std::ostringstream why;
          why << "n=" << n << " seed=" << seed << " " << to_string(r.op) << ": " << got << " != " << want;
          out.fail(why.str());
        }
        ++checked;
      }
    }
  }
  if (out.pass) out.detail << checked << " runs, n=3..5, 20 seeds each";
}

void operator_equivalence(Outcome& out) {
  std::mt19937 rng(918273);
  const int count = 120;
  for (int i = 0; i < count; ++i) {
    const int nvars = 2 + i % 2;
    auto fs = random_system(rng, nvars, 4, 3);
    std::vector<Verdict::Kind> kinds;
    for (auto op : {Operator::collins, Operator::mccallum, Operator::reduced}) {
      auto s = make(nvars, fs, op);
      auto v = s.check_sat();
      if (v.kind == Verdict::Kind::sat && !witness_valid(v, fs)) out.fail("invalid witness on instance " + std::to_string(i));
      kinds.push_back(v.kind);
    }
    if (kinds[0] != kinds[1] || kinds[0] != kinds[2]) out.fail("verdicts differ on instance " + std::to_string(i));
  }
  if (out.pass) out.detail << count << " instances agree";
}

void incremental_coherence(Outcome& out) {
  std::mt19937 rng(5150);
  const int count = 60;
  for (int i = 0; i < count; ++i) {
    const int nvars = 2 + i % 2;
    Solver s(nvars);
    std::map<int, Formula> live;
    const int steps = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < steps; ++k) {
      const bool remove = !live.empty() && std::uniform_int_distribution<int>(0, 2)(rng) == 0;
      if (remove) {
        auto it = std::next(live.begin(), std::uniform_int_distribution<int>(0, static_cast<int>(live.size()) - 1)(rng));
        s.remove_constraint(it->first);
        live.erase(it);
      } else {
        Relation rel = std::uniform_int_distribution<int>(0, 1)(rng) ? Relation::eq : random_relation(rng);
        Formula f = Formula::atom(random_nonconstant(rng, nvars, 2, 3), rel);
        live.emplace(s.add_constraint(f), f);
      }
      s.check_sat();
    }
    Solver fresh(nvars);
    for (const auto& [id, f] : live) fresh.add_constraint(f);
    if (s.check_sat().kind != fresh.check_sat().kind) out.fail("verdict differs on script " + std::to_string(i));
    if (sorted_sets(s) != sorted_sets(fresh)) out.fail("projection sets differ on script " + std::to_string(i));
  }
  if (out.pass) out.detail << count << " scripts match";
}

void ec_removal(Outcome& out) {
  auto s = make(2, {});
  const int ec = s.add_constraint(A("x^2+y^2-1", Relation::eq));
  s.add_constraint(A("x+y", Relation::gt));
  if (s.hierarchy().op[1] != Operator::reduced) out.fail("level operator not reduced before removal");
  s.remove_constraint(ec);
  if (s.hierarchy().op[1] != Operator::mccallum) out.fail("level operator not mccallum after removal");
  if (s.stats().ec_removal_escalations < 1) out.fail("escalation not flagged in stats");
  auto fresh = make(2, {A("x+y", Relation::gt)});
  if (s.check_sat().kind != fresh.check_sat().kind) out.fail("verdict differs from scratch build");
  if (out.pass) out.detail << "reduced -> mccallum, ec_removal_escalations=" << s.stats().ec_removal_escalations;
}

void repair(Outcome& out) {
  const std::vector<std::string> names{"w", "x", "y", "z"};
  std::vector<Formula> fs{A("x*z+y", Relation::eq, names), A("z-w", Relation::gt, names)};
  auto collins = make(4, fs, Operator::collins);
  const auto expected = collins.check_sat().kind;
  auto s = make(4, fs, Operator::mccallum);
  const auto got = s.check_sat().kind;
  if (s.reports().size() != 1) out.fail(std::to_string(s.reports().size()) + " nullification reports");
  if (s.stats().repairs < 1) out.fail("no repair recorded");
  if (got != expected) out.fail("verdict differs from collins");
  if (out.pass)
    out.detail << "1 report at level " << s.reports().front().level << ", verdict " << to_string(got) << " matches collins";
}

Polynomial random_squarefree(std::mt19937& rng) {
  while (true) {
    Polynomial p;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      p = oracle::random_poly(rng, 1, 8, 20, 9);
    } else {
      // products of linear and quadratic factors give many real roots
      p = Polynomial(1);
      const int factors = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int f = 0; f < factors; ++f) p *= oracle::random_poly(rng, 1, 2, 9, 3);
    }
    if (p.is_constant() || p.degree(0) > 8) continue;
    if (!gcd(p, p.derivative(0)).is_constant()) continue;
    return p;
  }
}

void root_isolation(Outcome& out) {
  std::mt19937 rng(8675309);
  const int count = 500;
  int roots_total = 0;
  for (int i = 0; i < count; ++i) {
    const Polynomial p = random_squarefree(rng);
    auto roots = isolate_roots(p);
    roots_total += static_cast<int>(roots.size());
    if (static_cast<int>(roots.size()) != oracle::sturm_root_count(p)) out.fail("root count differs for " + p.to_string());
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      const auto& a = roots[k];
      const auto& b = roots[k + 1];
      const Rational a_hi = a.is_rational() ? a.value() : a.hi();
      const Rational b_lo = b.is_rational() ? b.value() : b.lo();
      // isolating intervals are open, so touching endpoints are still disjoint
      const bool disjoint = a.is_rational() && b.is_rational() ? a_hi < b_lo : a_hi <= b_lo;
      if (!disjoint) out.fail("overlapping intervals for " + p.to_string());
    }
    for (const auto& r : roots) {
      if (r.is_rational()) {
        if (!p.substitute(0, r.value()).is_zero()) out.fail("rational root is not a root of " + p.to_string());
      } else if (sgn(p.substitute(0, r.lo()).constant_value()) * sgn(p.substitute(0, r.hi()).constant_value()) != -1) {
        out.fail("no sign change across interval for " + p.to_string());
      }
    }
  }
  if (out.pass) out.detail << count << " polynomials, " << roots_total << " roots";
}

void named_instances(Outcome& out) {
  using namespace std::chrono;
  auto timed = [&](const char* name, const std::function<bool()>& run) {
    const auto start = steady_clock::now();
    const bool ok = run();
    const double secs = duration<double>(steady_clock::now() - start).count();
    if (!ok) out.fail(std::string(name) + " wrong");
    if (secs >= 1.0) out.fail(std::string(name) + " took over 1 s");
  };
  timed("circle and x+y>2", [] {
    return make(2, {A("x^2+y^2-1", Relation::eq), A("x+y-2", Relation::gt)}).check_sat().kind == Verdict::Kind::unsat;
  });
  timed("circle and x+y>1", [] {
    std::vector<Formula> fs{A("x^2+y^2-1", Relation::eq), A("x+y-1", Relation::gt)};
    auto s = make(2, fs);
    return witness_valid(s.check_sat(), fs);
  });
  timed("forall x. x^2+1>0", [] {
    auto s = make(1, {A("x^2+1", Relation::gt)});
    s.set_quantifiers({Quantifier::forall});
    return s.decide().kind == Verdict::Kind::true_;
  });
  timed("exists x. x^2+1=0", [] {
    auto s = make(1, {A("x^2+1", Relation::eq)});
    s.set_quantifiers({Quantifier::exists});
    return s.decide().kind == Verdict::Kind::false_;
  });
  if (out.pass) out.detail << "4 instances correct";
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
    den += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
  }
  return num / den;
}

void growth_trend(Outcome& out) {
  std::vector<double> ns, reduced, mccallum;
  const int instances = 5;
  for (int n = 3; n <= 10; ++n) {
    double sum_r = 0, sum_m = 0;
    for (const auto& r : run_bench(size_family(n, 7, instances), {Operator::mccallum, Operator::reduced}, {}, false))
      (r.op == Operator::reduced ? sum_r : sum_m) += r.steps.at(0).disc_plus_res();
    ns.push_back(n);
    reduced.push_back(sum_r / instances);
    mccallum.push_back(sum_m / instances);
  }
  const double sr = loglog_slope(ns, reduced);
  const double sm = loglog_slope(ns, mccallum);
  if (std::abs(sr - 1.0) > 0.3) out.fail("ec-reduced exponent out of range");
  if (std::abs(sm - 2.0) > 0.3) out.fail("mccallum exponent out of range");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%sexponents ec-reduced %.3f, mccallum %.3f", out.pass ? "" : ": ", sr, sm);
  out.detail << buf;
}

}  // namespace
}  // namespace cadec

int main() {
  using namespace cadec;
  struct Criterion {
    const char* name;
    double limit_seconds;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"projection size n(n+1)/2 vs n", 10, projection_size},
      {"operators agree on random instances", 300, operator_equivalence},
      {"incremental edits match scratch builds", 300, incremental_coherence},
      {"removing the EC escalates the operator", 1, ec_removal},
      {"nullification repair", 10, repair},
      {"root isolation against Sturm counts", 30, root_isolation},
      {"named instances", 4, named_instances},
      {"projection growth exponents", 60, growth_trend},
  };
  int failures = 0;
  int number = 0;
  for (const auto& c : criteria) {
    ++number;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) out.fail("over the time limit");
    if (!out.pass) ++failures;
    std::printf("criterion %d: %s  %s (%s; %.2f s)\n", number, out.pass ? "PASS" : "FAIL", c.name,
                out.detail.str().c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
