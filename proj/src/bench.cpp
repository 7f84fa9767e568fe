#include "cadec/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"

namespace cadec {

namespace {

void monomials(int vars, int degree, Monomial& m, int v, std::vector<Monomial>& out) {
  if (v == vars) {
    out.push_back(m);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    m[v] = static_cast<std::uint16_t>(e);
    monomials(vars, degree - e, m, v + 1, out);
  }
  m[v] = 0;
}

std::vector<std::string> header(int vars, bool timing) {
  std::vector<std::string> h{"instance", "operator"};
  for (int s = 1; s < vars; ++s) {
    h.push_back("s" + std::to_string(s) + ".disc+res");
    h.push_back("s" + std::to_string(s) + ".total");
  }
  h.push_back("cells");
  h.push_back("verdict");
  if (timing) h.push_back("seconds");
  return h;
}

}  // namespace

std::vector<std::string> bench_variables(int vars) {
  std::vector<std::string> names;
  for (int i = 1; i <= vars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<Formula> bench_instance(const BenchFamily& family, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(family.seed), static_cast<std::uint32_t>(family.seed >> 32),
                    static_cast<std::uint32_t>(k)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> coef(1, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Monomial> monos;
  Monomial m;
  monomials(family.vars, family.degree, m, 0, monos);
  std::vector<Formula> out;
  for (int i = 0; i < family.constraints; ++i) {
    std::vector<Polynomial::Term> terms;
    for (const auto& mono : monos) terms.push_back({mono, Rational(sign(rng) ? coef(rng) : -coef(rng))});
    Relation rel = i < family.ecs ? Relation::eq : (sign(rng) ? Relation::gt : Relation::lt);
    out.push_back(Formula::atom(Polynomial::from_terms(std::move(terms)), rel));
  }
  return out;
}

std::vector<BenchRow> run_bench(const BenchFamily& family, const std::vector<Operator>& ops,
                                const EngineOptions& base, bool lift) {
  std::vector<BenchRow> rows;
  for (int k = 0; k < family.instances; ++k) {
    const auto fs = bench_instance(family, k);
    for (Operator op : ops) {
      const auto start = std::chrono::steady_clock::now();
      EngineOptions opt = base;
      opt.policy = op;
      Solver s(family.vars, opt);
      for (const auto& f : fs) s.add_constraint(f);
      BenchRow row;
      row.instance = k;
      row.op = op;
      row.verdict = "-";
      Hierarchy h;
      if (lift) {
        try {
          row.verdict = to_string(s.check_sat().kind);
          row.cells = s.stats().cells;
          h = s.hierarchy();
        } catch (const BudgetExceeded&) {
          row.verdict = "budget";
          h = s.projection();
        }
      } else {
        h = s.projection();
      }
      for (int l = family.vars - 1; l >= 1; --l) row.steps.push_back(h.raw[static_cast<std::size_t>(l)]);
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_table(const BenchFamily& family, const std::vector<BenchRow>& rows, bool timing) {
  std::vector<std::vector<std::string>> table{header(family.vars, timing)};
  for (const auto& r : rows) {
    std::vector<std::string> line{std::to_string(r.instance), to_string(r.op)};
    for (const auto& s : r.steps) {
      line.push_back(std::to_string(s.disc_plus_res()));
      line.push_back(std::to_string(s.total));
    }
    line.push_back(r.cells ? std::to_string(*r.cells) : "-");
    line.push_back(r.verdict);
    if (timing) {
      std::ostringstream os;
      os.precision(3);
      os << std::fixed << r.seconds;
      line.push_back(os.str());
    }
    table.push_back(std::move(line));
  }
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  const std::size_t verdict_col = width.size() - (timing ? 2 : 1);
  std::ostringstream out;
  out << "# vars=" << family.vars << " degree=" << family.degree << " constraints=" << family.constraints
      << " ecs=" << family.ecs << " seed=" << family.seed << " instances=" << family.instances << "\n";
  for (const auto& line : table) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      std::string cell = line[c];
      // names left-aligned, numbers right-aligned
      const bool left = c == 1 || c == verdict_col;
      std::string pad(width[c] - cell.size(), ' ');
      text += left ? cell + pad : pad + cell;
      if (c + 1 < line.size()) text += "  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  }
  return out.str();
}

std::string bench_json(const BenchFamily& family, const std::vector<BenchRow>& rows, bool timing) {
  using nlohmann::json;
  const auto names = bench_variables(family.vars);
  json doc{{"family",
            {{"vars", family.vars},
             {"degree", family.degree},
             {"constraints", family.constraints},
             {"ecs", family.ecs},
             {"seed", family.seed},
             {"instances", family.instances}}},
           {"rows", json::array()}};
  for (const auto& r : rows) {
    json steps = json::array();
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& s = r.steps[i];
      steps.push_back({{"step", i + 1},
                       {"eliminates", names[names.size() - 1 - i]},
                       {"coefficients", s.coefficients},
                       {"discriminants", s.discriminants},
                       {"resultants", s.resultants},
                       {"pscs", s.pscs},
                       {"total", s.total}});
    }
    json row{{"instance", r.instance},
             {"operator", to_string(r.op)},
             {"steps", steps},
             {"cells", r.cells ? json(*r.cells) : json(nullptr)},
             {"verdict", r.verdict}};
    if (timing) row["seconds"] = r.seconds;
    doc["rows"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

}  // namespace cadec
