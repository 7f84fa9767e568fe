#include "cadec/lifting.hpp"

#include <algorithm>
#include <map>

namespace cadec {

int cell_dimension(const std::vector<int>& index) {
  return static_cast<int>(std::count_if(index.begin(), index.end(), [](int i) { return i % 2 == 1; }));
}

int Cell::dimension() const { return cell_dimension(index); }

std::size_t Cell::count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.count();
  return n;
}

void Budget::charge(std::size_t cells) {
  created += cells;
  if (created > cell_cap) throw BudgetExceeded("cell cap of " + std::to_string(cell_cap) + " exceeded");
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw BudgetExceeded("time cap exceeded");
}

namespace {

struct Entry {
  AlgebraicNumber root;
  std::vector<Polynomial> zeros;
  int old_pos = -1;
};

std::vector<Polynomial> difference(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void insert_sorted(std::vector<Polynomial>& v, const Polynomial& p) {
  auto it = std::lower_bound(v.begin(), v.end(), p);
  if (it == v.end() || *it != p) v.insert(it, p);
}

void insert_root(std::vector<Entry>& entries, AlgebraicNumber root, const Polynomial& p, SamplePoint& base) {
  std::size_t lo = 0, hi = entries.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto c = compare(root, entries[mid].root, base);
    if (c == 0) {
      insert_sorted(entries[mid].zeros, p);
      return;
    }
    if (c < 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  entries.insert(entries.begin() + static_cast<std::ptrdiff_t>(lo), Entry{std::move(root), {p}, -1});
}

void reindex(std::vector<Cell>& cells, const std::vector<int>& prefix) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::vector<int> idx = prefix;
    idx.push_back(static_cast<int>(k) + 1);
    if (cells[k].index == idx) continue;
    cells[k].index = std::move(idx);
    reindex(cells[k].children, cells[k].index);
  }
}

NullificationReport make_report(const Cell& base, const LiftSpec& spec, const Polynomial& p) {
  NullificationReport r;
  r.polynomial = p;
  auto it = std::lower_bound(spec.polys.begin(), spec.polys.end(), p);
  if (it != spec.polys.end() && *it == p && spec.origins.size() == spec.polys.size())
    r.origin = spec.origins[static_cast<std::size_t>(it - spec.polys.begin())];
  r.cell_index = base.index;
  r.sample = base.sample;
  r.cell_dimension = base.dimension();
  r.level = spec.level;
  r.op = spec.op;
  return r;
}

/// Rebuilds the stack of `base` for `spec`; `old` is the compatible spec the
/// current children were built from, or null to start from nothing.
std::optional<NullificationReport> restack(Cell& base, const LiftSpec& spec, const LiftSpec* old, Budget& budget,
                                           LiftStats& stats) {
  const Var v = spec.level;
  const int dim = base.dimension();
  const bool tolerant = spec.op == Operator::collins;
  std::map<Polynomial, RootIsolation> isolations;
  auto isolate = [&](const Polynomial& p) -> RootIsolation& {
    auto it = isolations.find(p);
    if (it == isolations.end()) it = isolations.emplace(p, substitute_partial(p, base.sample)).first;
    return it->second;
  };

  bool reduced = base.reduced_stack;
  if (!old) {
    reduced = spec.op == Operator::reduced;
    if (reduced) {
      for (const auto& part : spec.ec_parts) {
        if (!isolate(part).nullified) continue;
        if (dim > 0) return make_report(base, spec, part);
        // the EC vanishes on the whole cylinder over this point
        ++stats.tolerated_nullifications;
        reduced = false;
      }
    }
  }
  const std::vector<Polynomial>& new_set = reduced ? spec.ec_parts : spec.polys;
  std::vector<Polynomial> old_set;
  if (old) old_set = base.reduced_stack ? old->ec_parts : old->polys;
  auto added = difference(new_set, old_set);
  auto removed = difference(old_set, new_set);
  if (old && added.empty() && removed.empty()) {
    stats.cells_preserved += base.children.size();
    return std::nullopt;
  }

  std::vector<Entry> entries;
  for (std::size_t pos = 0; pos < base.children.size(); ++pos) {
    const Cell& c = base.children[pos];
    if (c.is_section()) entries.push_back({c.sample[static_cast<std::size_t>(v)], c.zeros, static_cast<int>(pos)});
  }
  for (const auto& p : added) {
    auto& iso = isolate(p);
    if (iso.nullified) {
      if (dim > 0 && !tolerant) return make_report(base, spec, p);
      ++stats.tolerated_nullifications;
      continue;
    }
    for (const auto& root : iso.roots) insert_root(entries, root, p, base.sample);
  }
  for (auto& e : entries)
    for (const auto& p : removed) {
      auto it = std::lower_bound(e.zeros.begin(), e.zeros.end(), p);
      if (it != e.zeros.end() && *it == p) e.zeros.erase(it);
    }
  std::erase_if(entries, [](const Entry& e) { return e.zeros.empty(); });

  ++stats.stacks_lifted;
  std::vector<Cell> old_children = std::move(base.children);
  const int old_size = static_cast<int>(old_children.size());
  std::vector<Cell> cells;
  const std::size_t m = entries.size();
  for (std::size_t i = 0; i <= m; ++i) {
    const int lower = i > 0 ? entries[i - 1].old_pos : -1;
    const int upper = i < m ? entries[i].old_pos : -1;
    int reuse = -1;
    if (old_size > 0) {
      if (i == 0 && m == 0) {
        if (old_size == 1) reuse = 0;
      } else if (i == 0) {
        if (upper == 1) reuse = 0;
      } else if (i == m) {
        if (lower >= 0 && lower == old_size - 2) reuse = old_size - 1;
      } else if (lower >= 0 && upper == lower + 2) {
        reuse = lower + 1;
      }
    }
    if (reuse >= 0) {
      cells.push_back(std::move(old_children[static_cast<std::size_t>(reuse)]));
      ++stats.cells_preserved;
    } else {
      Rational r;
      if (m == 0)
        r = 0;
      else if (i == 0)
        r = rational_below(entries[0].root);
      else if (i == m)
        r = rational_above(entries[m - 1].root);
      else
        r = rational_between(entries[i - 1].root, entries[i].root, base.sample);
      budget.charge(1);
      ++stats.cells_created;
      Cell sector;
      sector.sample = base.sample.extended(AlgebraicNumber::rational(v, r));
      sector.pruned = reduced;
      cells.push_back(std::move(sector));
    }
    if (i == m) break;
    Entry& e = entries[i];
    if (e.old_pos >= 0) {
      Cell section = std::move(old_children[static_cast<std::size_t>(e.old_pos)]);
      section.zeros = std::move(e.zeros);
      cells.push_back(std::move(section));
      ++stats.cells_preserved;
    } else {
      budget.charge(1);
      ++stats.cells_created;
      Cell section;
      section.sample = base.sample.extended(e.root);
      section.zeros = std::move(e.zeros);
      cells.push_back(std::move(section));
    }
  }
  reindex(cells, base.index);
  base.children = std::move(cells);
  base.reduced_stack = reduced;
  return std::nullopt;
}

bool compatible(const LiftSpec& old, const LiftSpec& next) {
  if ((old.op == Operator::reduced) != (next.op == Operator::reduced)) return false;
  if (old.ec_parts != next.ec_parts) return false;
  // nullifications tolerated under collins must be re-examined
  if (old.op == Operator::collins && next.op != Operator::collins) return false;
  return true;
}

}  // namespace

StackResult lift_cell(Cell& base, const LiftSpec& spec, Budget& budget, LiftStats& stats) {
  Cell scratch;
  scratch.index = base.index;
  scratch.sample = base.sample;
  StackResult out;
  out.nullification = restack(scratch, spec, nullptr, budget, stats);
  if (!out.nullification) out.cells = std::move(scratch.children);
  return out;
}

std::optional<NullificationReport> sync_tree(Cell& cell, const std::vector<LiftSpecPtr>& specs, Budget& budget,
                                             LiftStats& stats) {
  const auto k = static_cast<std::size_t>(cell.level());
  if (k >= specs.size() || cell.pruned) return std::nullopt;
  const LiftSpecPtr& spec = specs[k];
  if (!cell.lifted_with || !compatible(*cell.lifted_with, *spec)) {
    cell.children.clear();
    cell.lifted_with.reset();
    cell.reduced_stack = false;
    if (auto r = restack(cell, *spec, nullptr, budget, stats)) return r;
    cell.lifted_with = spec;
  } else if (cell.lifted_with != spec) {
    if (auto r = restack(cell, *spec, cell.lifted_with.get(), budget, stats)) return r;
    cell.lifted_with = spec;
  }
  for (auto& child : cell.children)
    if (auto r = sync_tree(child, specs, budget, stats)) return r;
  return std::nullopt;
}

}  // namespace cadec
