#pragma once

// Quantifier-free Tarski formulas: Boolean combinations of polynomial sign
// conditions p rel 0.

#include <string>
#include <vector>

#include "cadec/polynomial.hpp"

namespace cadec {

enum class Relation { eq, ne, lt, le, gt, ge };
enum class Quantifier { free, exists, forall };

/// SMT-LIB spelling ("=", "<", ...); ne has no symbol of its own.
const char* to_string(Relation rel);
bool holds(Relation rel, int sign);
Relation negate(Relation rel);
/// Relation r' with (-p) r' 0 equivalent to p r 0.
Relation flip(Relation rel);

struct Formula {
  enum class Kind { atom, conj, disj, neg, constant };

  Kind kind = Kind::constant;
  Polynomial poly;
  Relation rel = Relation::eq;
  bool value = true;
  std::vector<Formula> args;

  static Formula atom(Polynomial p, Relation rel);
  static Formula conj(std::vector<Formula> args);
  static Formula disj(std::vector<Formula> args);
  static Formula neg(Formula f);
  static Formula constant(bool v);

  friend bool operator==(const Formula&, const Formula&) = default;

  /// Top-level conjuncts with nested conjunctions flattened.
  std::vector<const Formula*> conjuncts() const;
  /// All atom polynomials, in order of appearance.
  void collect(std::vector<Polynomial>& out) const;

  template <class SignFn>
  bool evaluate(SignFn&& sign) const {
    switch (kind) {
      case Kind::atom: return holds(rel, sign(poly));
      case Kind::conj:
        for (const auto& a : args)
          if (!a.evaluate(sign)) return false;
        return true;
      case Kind::disj:
        for (const auto& a : args)
          if (a.evaluate(sign)) return true;
        return false;
      case Kind::neg: return !args.front().evaluate(sign);
      case Kind::constant: return value;
    }
    return false;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;
};

}  // namespace cadec
