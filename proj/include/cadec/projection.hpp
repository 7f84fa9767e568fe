#pragma once

// Projection operators (Collins, McCallum, equational-constraint reduced),
// level sets with provenance, EC designation and propagation.
//
// Every set handed to lifting is a gcd-free basis: its members are primitive,
// square-free, pairwise coprime, normalized (normalize_unit) and sorted. The
// basis of a multiset of polynomials is unique, so level sets do not depend
// on the order in which constraints were added.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cadec/polynomial.hpp"

namespace cadec {

using IdSet = std::set<int>;

IdSet merge(const IdSet& a, const IdSet& b);

/// Ordered by escalation: reduced < mccallum < collins.
enum class Operator { reduced = 0, mccallum = 1, collins = 2 };
enum class Rule { input, coefficient, discriminant, resultant, psc, content };

const char* to_string(Operator op);
const char* to_string(Rule rule);
Operator escalate(Operator op);

struct ProjPoly {
  Polynomial poly;
  IdSet origin;
  Operator op = Operator::mccallum;
  Rule rule = Rule::input;
};

/// Members all have main variable `level`.
struct ProjectionLevel {
  Var level = 0;
  std::vector<ProjPoly> polys;

  std::vector<Polynomial> polynomials() const;
  const ProjPoly* find(const Polynomial& p) const;
};

/// Counts before normalization.
struct RawCounts {
  int coefficients = 0;
  int discriminants = 0;
  int resultants = 0;
  int pscs = 0;
  int total = 0;

  int disc_plus_res() const { return discriminants + resultants; }
};

struct Projected {
  /// Normalized zero-set components, deduplicated, sorted; any level below.
  std::vector<ProjPoly> polys;
  RawCounts raw;
  std::vector<std::string> assumptions;
};

struct ECDesignation {
  enum class Provenance { input, propagated };
  Var level = 0;
  Polynomial polynomial;
  IdSet origin;
  Provenance provenance = Provenance::input;
  /// Tie-break key: input order for input ECs, creation order after them.
  int sequence = 0;
};

class PrimitivityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Memo of resultants, discriminants, psc chains and gcds keyed by operands.
class ProjectionCache {
 public:
  Polynomial resultant(const Polynomial& a, const Polynomial& b, Var v);
  Polynomial discriminant(const Polynomial& a, Var v);
  const std::vector<Polynomial>& psc(const Polynomial& a, const Polynomial& b, Var v);
  Polynomial gcd(const Polynomial& a, const Polynomial& b);
  std::size_t size() const { return table_.size(); }

 private:
  using Key = std::tuple<char, Var, Polynomial, Polynomial>;
  std::map<Key, std::vector<Polynomial>> table_;
};

/// Gcd-free basis of the given polynomials (each of positive degree in
/// `level`); origins are unions over the inputs each member divides.
ProjectionLevel make_level(Var level, const std::vector<ProjPoly>& polys, ProjectionCache* cache = nullptr);

/// Normalized zero-set components of p tagged with `rule`; components of the
/// content are tagged `content`.
std::vector<ProjPoly> components(const Polynomial& p, const IdSet& origin, Operator op, Rule rule);

Projected project_collins(const ProjectionLevel& s, ProjectionCache* cache = nullptr);
Projected project_mccallum(const ProjectionLevel& s, ProjectionCache* cache = nullptr);
/// P_M({F}) together with res(F, g) for the other members g of s. Throws
/// PrimitivityError if F is not primitive of positive degree in its level.
Projected project_reduced(const ECDesignation& f, const ProjectionLevel& s, ProjectionCache* cache = nullptr);

/// True iff p passes the EC gate at `level`.
bool ec_admissible(const Polynomial& p, Var level);

/// Result of propagating two ECs of one level.
struct Propagation {
  std::optional<ECDesignation> ec;
  /// Set when the resultant is a nonzero constant: the equations have no
  /// common real (even complex) solution.
  bool contradiction = false;
};
Propagation propagate_ec(const ECDesignation& f1, const ECDesignation& f2, int sequence,
                         ProjectionCache* cache = nullptr);

/// Preferred EC among candidates of one level (degree in the level variable,
/// then total degree, then sequence).
const ECDesignation* choose_ec(const std::vector<ECDesignation>& candidates);

struct InputPoly {
  Polynomial poly;
  int id = 0;
};

struct ProjectionPolicy {
  Operator base = Operator::mccallum;
  /// Escalated minimum operator per level (absent = none).
  std::map<Var, Operator> floor;
};

/// Full projection phase over n variables.
struct Hierarchy {
  int nvars = 0;
  std::vector<ProjectionLevel> levels;
  /// Operator used to project (and lift) each level.
  std::vector<Operator> op;
  std::vector<std::optional<ECDesignation>> ec;
  /// Raw counts of the projection applied at each level (zero at level 0).
  std::vector<RawCounts> raw;
  bool contradiction = false;
  IdSet contradiction_origin;
  std::vector<std::string> assumptions;
};

/// `ec_candidates` are the syntactic equational conjuncts (already passed
/// through the gate or not; inadmissible ones are skipped). ECs are used only
/// when the policy's base operator is reduced.
Hierarchy project_hierarchy(int nvars, const std::vector<InputPoly>& inputs,
                            const std::vector<ECDesignation>& ec_candidates, const ProjectionPolicy& policy,
                            ProjectionCache& cache);

}  // namespace cadec
