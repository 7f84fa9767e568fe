#include "cadec/formula.hpp"

#include <stdexcept>

namespace cadec {

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::eq: return "=";
    case Relation::ne: return "!=";
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::gt: return ">";
    case Relation::ge: return ">=";
  }
  return "?";
}

bool holds(Relation rel, int sign) {
  switch (rel) {
    case Relation::eq: return sign == 0;
    case Relation::ne: return sign != 0;
    case Relation::lt: return sign < 0;
    case Relation::le: return sign <= 0;
    case Relation::gt: return sign > 0;
    case Relation::ge: return sign >= 0;
  }
  return false;
}

Relation negate(Relation rel) {
  switch (rel) {
    case Relation::eq: return Relation::ne;
    case Relation::ne: return Relation::eq;
    case Relation::lt: return Relation::ge;
    case Relation::le: return Relation::gt;
    case Relation::gt: return Relation::le;
    case Relation::ge: return Relation::lt;
  }
  return rel;
}

Relation flip(Relation rel) {
  switch (rel) {
    case Relation::lt: return Relation::gt;
    case Relation::le: return Relation::ge;
    case Relation::gt: return Relation::lt;
    case Relation::ge: return Relation::le;
    default: return rel;
  }
}

Formula Formula::atom(Polynomial p, Relation rel) {
  Formula f;
  f.kind = Kind::atom;
  f.poly = std::move(p);
  f.rel = rel;
  return f;
}

Formula Formula::conj(std::vector<Formula> args) {
  Formula f;
  f.kind = Kind::conj;
  f.args = std::move(args);
  return f;
}

Formula Formula::disj(std::vector<Formula> args) {
  Formula f;
  f.kind = Kind::disj;
  f.args = std::move(args);
  return f;
}

Formula Formula::neg(Formula g) {
  Formula f;
  f.kind = Kind::neg;
  f.args.push_back(std::move(g));
  return f;
}

Formula Formula::constant(bool v) {
  Formula f;
  f.kind = Kind::constant;
  f.value = v;
  return f;
}

std::vector<const Formula*> Formula::conjuncts() const {
  if (kind != Kind::conj) return {this};
  std::vector<const Formula*> out;
  for (const auto& a : args)
    for (const Formula* c : a.conjuncts()) out.push_back(c);
  return out;
}

void Formula::collect(std::vector<Polynomial>& out) const {
  if (kind == Kind::atom) out.push_back(poly);
  for (const auto& a : args) a.collect(out);
}

std::string Formula::to_string(const std::vector<std::string>& names) const {
  auto join = [&](const char* op) {
    std::string s = std::string("(") + op;
    for (const auto& a : args) s += " " + a.to_string(names);
    return s + ")";
  };
  switch (kind) {
    case Kind::atom:
      if (rel == Relation::ne) return "(not (= " + poly.to_string(names) + " 0))";
      return std::string("(") + cadec::to_string(rel) + " " + poly.to_string(names) + " 0)";
    case Kind::conj: return join("and");
    case Kind::disj: return join("or");
    case Kind::neg: return join("not");
    case Kind::constant: return value ? "true" : "false";
  }
  return "?";
}

}  // namespace cadec
