#pragma once

// Stack construction over cells, incremental stack maintenance and
// nullification detection.
//
// Every cell remembers the lifting specification its stack was built from.
// Syncing a subtree against new specifications applies only the difference:
// sections of deleted polynomials are merged out, roots of new polynomials
// are merged in, and cells whose bounding sections are unchanged keep their
// sample and subtree. An interrupted sync leaves every cell consistent with
// the specification it records, so it can simply be re-run.

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cadec/projection.hpp"
#include "cadec/realalg.hpp"

namespace cadec {

enum class Truth { undetermined, false_, true_ };

/// How one level is lifted.
struct LiftSpec {
  Var level = 0;
  /// Level set (gcd-free basis, sorted).
  std::vector<Polynomial> polys;
  Operator op = Operator::mccallum;
  /// Members of `polys` forming the designated EC; nonempty iff op is reduced.
  std::vector<Polynomial> ec_parts;
  /// Origins per member of `polys` (same order), used in reports.
  std::vector<IdSet> origins;
};
using LiftSpecPtr = std::shared_ptr<const LiftSpec>;

struct Cell {
  std::vector<int> index;
  SamplePoint sample;
  /// Sections only: members of the parent's lifting set vanishing here.
  std::vector<Polynomial> zeros;
  std::vector<Cell> children;
  /// Specification the children were built from; null if not lifted.
  LiftSpecPtr lifted_with;
  /// Sector of a reduced stack: off the EC, so no children and false.
  bool pruned = false;
  /// The children were built against the EC parts only.
  bool reduced_stack = false;
  Truth truth = Truth::undetermined;
  /// Sign memo for leaf evaluation.
  std::vector<std::pair<Polynomial, int>> signs;

  int level() const { return static_cast<int>(index.size()); }
  bool is_section() const { return !index.empty() && index.back() % 2 == 0; }
  int dimension() const;
  std::size_t count() const;
};

int cell_dimension(const std::vector<int>& index);

struct NullificationReport {
  Polynomial polynomial;
  IdSet origin;
  std::vector<int> cell_index;
  SamplePoint sample;
  int cell_dimension = 0;
  Var level = 0;
  Operator op = Operator::mccallum;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t cell_cap = 1000000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::size_t created = 0;

  void charge(std::size_t cells);
};

struct LiftStats {
  std::size_t stacks_lifted = 0;
  std::size_t cells_created = 0;
  std::size_t cells_preserved = 0;
  std::size_t tolerated_nullifications = 0;
};

/// Stack over `base` for `spec`, built from scratch; children are not lifted.
/// Returns a report instead when a member vanishes identically over a
/// positive-dimensional base under a McCallum-type operator.
struct StackResult {
  std::vector<Cell> cells;
  std::optional<NullificationReport> nullification;
};
StackResult lift_cell(Cell& base, const LiftSpec& spec, Budget& budget, LiftStats& stats);

/// Brings the subtree of `cell` in line with specs[cell.level() ..].
std::optional<NullificationReport> sync_tree(Cell& cell, const std::vector<LiftSpecPtr>& specs, Budget& budget,
                                             LiftStats& stats);

}  // namespace cadec
