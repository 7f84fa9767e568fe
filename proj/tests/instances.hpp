#pragma once

// Random constraint systems shared by the engine tests and the acceptance run.

#include <random>
#include <vector>

#include "cadec/formula.hpp"
#include "oracles.hpp"

namespace cadec {

inline Polynomial random_nonconstant(std::mt19937& rng, int nvars, int maxdeg, int coef, int max_terms = 4) {
  while (true) {
    Polynomial p = oracle::random_poly(rng, nvars, maxdeg, coef, max_terms);
    if (!p.is_constant()) return p;
  }
}

inline Relation random_relation(std::mt19937& rng) {
  static constexpr Relation all[] = {Relation::eq, Relation::ne, Relation::lt,
                                     Relation::le, Relation::gt, Relation::ge};
  return all[std::uniform_int_distribution<int>(0, 5)(rng)];
}

/// Conjunction of 1..max_constraints atoms; the first one is an equation.
inline std::vector<Formula> random_system(std::mt19937& rng, int nvars, int max_constraints, int maxdeg) {
  const int n = std::uniform_int_distribution<int>(1, max_constraints)(rng);
  std::vector<Formula> out;
  for (int i = 0; i < n; ++i) {
    Relation rel = i == 0 ? Relation::eq : random_relation(rng);
    out.push_back(Formula::atom(random_nonconstant(rng, nvars, maxdeg, 3), rel));
  }
  return out;
}

}  // namespace cadec
