#pragma once

// Solver state: constraint set, projection hierarchy and CAD tree, kept in
// sync incrementally. Queries bring the state up to date first.

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cadec/formula.hpp"
#include "cadec/lifting.hpp"
#include "cadec/projection.hpp"

namespace cadec {

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  /// collins, mccallum or reduced (EC-reduced where the formula allows it).
  Operator policy = Operator::reduced;
  std::size_t cell_cap = 1000000;
  std::optional<double> time_cap_seconds;
  /// Treat a disjunction of equations as the EC given by their product.
  bool product_ec = false;
};

struct LevelStats {
  Operator op = Operator::mccallum;
  /// Raw counts of the projection applied at this level.
  RawCounts raw;
  /// Size of the level set.
  std::size_t polys = 0;
  std::optional<std::string> ec;
};

struct EngineStats {
  std::vector<LevelStats> levels;
  std::size_t cells = 0;
  std::size_t stacks_lifted = 0;
  std::size_t cells_created = 0;
  std::size_t cells_preserved = 0;
  std::size_t tolerated_nullifications = 0;
  int nullification_reports = 0;
  int repairs = 0;
  /// Levels whose operator grew from reduced when an EC was removed.
  int ec_removal_escalations = 0;
  bool proven_unsat_by_propagation = false;
  double seconds = 0;
};

struct Verdict {
  enum class Kind { sat, unsat, true_, false_ };
  Kind kind = Kind::unsat;
  std::optional<SamplePoint> witness;
  std::vector<int> witness_index;
};

const char* to_string(Verdict::Kind kind);

struct TrueCell {
  std::vector<int> index;
  SamplePoint sample;
};

class Solver {
 public:
  explicit Solver(int nvars = 0, EngineOptions options = {});

  int nvars() const { return nvars_; }
  /// Appends a variable above all existing ones.
  Var add_variable();

  /// Adds a constraint (a conjunct of the matrix); returns its ID.
  int add_constraint(Formula f);
  void remove_constraint(int id);
  bool has_constraint(int id) const { return constraints_.count(id) != 0; }
  const std::map<int, Formula>& constraints() const { return constraints_; }
  void set_quantifiers(std::vector<Quantifier> prefix);
  void set_options(const EngineOptions& options);
  const EngineOptions& options() const { return options_; }

  /// Brings the CAD up to date (projection, lifting and repair).
  void build();
  Verdict check_sat();
  Verdict decide();
  std::vector<TrueCell> true_cells();

  const EngineStats& stats();
  const Hierarchy& hierarchy();
  /// Projection phase only: no lifting, hence no repair.
  Hierarchy projection();
  const Cell& root();
  /// Reports raised by the last build, in order.
  const std::vector<NullificationReport>& reports() const { return reports_; }
  /// Level sets as normalized polynomial lists, one per variable.
  std::vector<std::vector<Polynomial>> level_sets();

 private:
  std::vector<ECDesignation> ec_candidates() const;
  std::vector<InputPoly> inputs() const;
  ProjectionPolicy policy() const;
  bool leaf_truth(Cell& leaf);
  std::optional<bool> find_true_leaf(Cell& c, Verdict& out);
  bool decide_cell(Cell& c);
  void collect_true(Cell& c, std::vector<TrueCell>& out);
  void refresh_stats();

  int nvars_;
  EngineOptions options_;
  std::map<int, Formula> constraints_;
  int next_id_ = 0;
  std::vector<Quantifier> prefix_;

  struct Escalation {
    Operator op;
    IdSet origin;
  };
  std::map<Var, Escalation> escalations_;

  bool dirty_ = true;
  Hierarchy hierarchy_;
  ProjectionCache cache_;
  std::vector<LiftSpecPtr> specs_;
  Cell root_;
  LiftStats lift_stats_;
  std::vector<NullificationReport> reports_;
  EngineStats stats_;
};

}  // namespace cadec
