#pragma once

// Operator comparison over generated instance families.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cadec/engine.hpp"

namespace cadec {

struct BenchFamily {
  int vars = 2;
  int degree = 2;
  int constraints = 4;
  /// The first `ecs` constraints are equations, the rest strict inequalities.
  int ecs = 1;
  std::uint64_t seed = 1;
  int instances = 1;
};

struct BenchRow {
  int instance = 0;
  Operator op = Operator::mccallum;
  /// Raw counts per projection step; step 1 eliminates the main variable.
  std::vector<RawCounts> steps;
  /// Empty when lifting was skipped or ran out of budget.
  std::optional<std::size_t> cells;
  /// "sat", "unsat", "budget" or "-" when lifting was skipped.
  std::string verdict;
  double seconds = 0;
};

/// Variable names used by bench instances: x1 (lowest) .. xn.
std::vector<std::string> bench_variables(int vars);
/// Instance k of the family: dense polynomials with nonzero coefficients.
std::vector<Formula> bench_instance(const BenchFamily& family, int k);
std::vector<BenchRow> run_bench(const BenchFamily& family, const std::vector<Operator>& ops,
                                const EngineOptions& base, bool lift = true);
/// Aligned text table; timing adds a seconds column.
std::string bench_table(const BenchFamily& family, const std::vector<BenchRow>& rows, bool timing);
std::string bench_json(const BenchFamily& family, const std::vector<BenchRow>& rows, bool timing);

}  // namespace cadec
