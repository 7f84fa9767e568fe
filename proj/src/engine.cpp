#include "cadec/engine.hpp"

#include <algorithm>

#include "cadec/polyalg.hpp"

namespace cadec {

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::sat: return "sat";
    case Verdict::Kind::unsat: return "unsat";
    case Verdict::Kind::true_: return "true";
    case Verdict::Kind::false_: return "false";
  }
  return "?";
}

Solver::Solver(int nvars, EngineOptions options)
    : nvars_(nvars), options_(options), prefix_(static_cast<std::size_t>(nvars), Quantifier::free) {
  if (nvars < 0 || nvars > kMaxVars) throw EngineError("unsupported number of variables");
}

Var Solver::add_variable() {
  if (nvars_ >= kMaxVars) throw EngineError("too many variables (at most " + std::to_string(kMaxVars) + ")");
  prefix_.push_back(Quantifier::free);
  dirty_ = true;
  return static_cast<Var>(nvars_++);
}

int Solver::add_constraint(Formula f) {
  std::vector<Polynomial> polys;
  f.collect(polys);
  for (const auto& p : polys)
    if (!p.is_constant() && p.main_var() >= nvars_) throw EngineError("constraint uses an undeclared variable");
  const int id = next_id_++;
  constraints_.emplace(id, std::move(f));
  dirty_ = true;
  return id;
}

void Solver::remove_constraint(int id) {
  if (!constraints_.count(id)) throw EngineError("unknown constraint id " + std::to_string(id));
  build();
  const std::vector<Operator> before = hierarchy_.op;
  constraints_.erase(id);
  std::erase_if(escalations_, [id](const auto& kv) { return kv.second.origin.count(id) != 0; });
  dirty_ = true;
  build();
  for (std::size_t l = 0; l < before.size() && l < hierarchy_.op.size(); ++l)
    if (before[l] == Operator::reduced && hierarchy_.op[l] != Operator::reduced) ++stats_.ec_removal_escalations;
  refresh_stats();
}

void Solver::set_quantifiers(std::vector<Quantifier> prefix) {
  prefix.resize(static_cast<std::size_t>(nvars_), Quantifier::free);
  prefix_ = std::move(prefix);
}

void Solver::set_options(const EngineOptions& options) {
  if (options.policy != options_.policy || options.product_ec != options_.product_ec) dirty_ = true;
  options_ = options;
}

std::vector<ECDesignation> Solver::ec_candidates() const {
  std::vector<ECDesignation> out;
  if (options_.policy != Operator::reduced) return out;
  int seq = 0;
  auto add = [&](const Polynomial& p, int id) {
    if (p.is_constant()) return;
    out.push_back({p.main_var(), p, {id}, ECDesignation::Provenance::input, seq++});
  };
  for (const auto& [id, f] : constraints_) {
    for (const Formula* c : f.conjuncts()) {
      if (c->kind == Formula::Kind::atom && c->rel == Relation::eq) {
        add(c->poly, id);
      } else if (options_.product_ec && c->kind == Formula::Kind::disj) {
        Polynomial product(1);
        bool all_equations = !c->args.empty();
        for (const auto& a : c->args) {
          if (a.kind != Formula::Kind::atom || a.rel != Relation::eq) {
            all_equations = false;
            break;
          }
          product *= a.poly;
        }
        if (all_equations) add(product, id);
      }
    }
  }
  return out;
}

std::vector<InputPoly> Solver::inputs() const {
  std::vector<InputPoly> out;
  for (const auto& [id, f] : constraints_) {
    std::vector<Polynomial> polys;
    f.collect(polys);
    for (auto& p : polys)
      if (!p.is_constant()) out.push_back({std::move(p), id});
  }
  return out;
}

ProjectionPolicy Solver::policy() const {
  ProjectionPolicy policy{options_.policy, {}};
  for (const auto& [level, e] : escalations_) policy.floor[level] = e.op;
  return policy;
}

Hierarchy Solver::projection() { return project_hierarchy(nvars_, inputs(), ec_candidates(), policy(), cache_); }

void Solver::build() {
  if (!dirty_) return;
  const auto start = std::chrono::steady_clock::now();
  Budget budget;
  budget.cell_cap = options_.cell_cap;
  if (options_.time_cap_seconds)
    budget.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(*options_.time_cap_seconds));
  budget.created = root_.count() - 1;
  reports_.clear();

  const auto in = inputs();
  const auto ecs = ec_candidates();

  while (true) {
    hierarchy_ = project_hierarchy(nvars_, in, ecs, policy(), cache_);

    std::vector<LiftSpecPtr> specs;
    for (int l = 0; l < nvars_; ++l) {
      const auto li = static_cast<std::size_t>(l);
      auto spec = std::make_shared<LiftSpec>();
      spec->level = static_cast<Var>(l);
      spec->op = hierarchy_.op[li];
      for (const auto& p : hierarchy_.levels[li].polys) {
        spec->polys.push_back(p.poly);
        spec->origins.push_back(p.origin);
        if (spec->op == Operator::reduced && divide_exact(hierarchy_.ec[li]->polynomial, p.poly))
          spec->ec_parts.push_back(p.poly);
      }
      const LiftSpec* old = li < specs_.size() ? specs_[li].get() : nullptr;
      if (old && old->polys == spec->polys && old->op == spec->op && old->ec_parts == spec->ec_parts &&
          old->origins == spec->origins)
        specs.push_back(specs_[li]);
      else
        specs.push_back(std::move(spec));
    }
    specs_ = specs;
    auto report = sync_tree(root_, specs_, budget, lift_stats_);
    if (!report) break;
    const Operator current = hierarchy_.op[static_cast<std::size_t>(report->level)];
    if (current == Operator::collins) throw std::logic_error("nullification reported under the collins operator");
    auto& e = escalations_[report->level];
    e.op = std::max(e.op, escalate(current));
    e.origin = merge(e.origin, report->origin);
    reports_.push_back(std::move(*report));
    ++stats_.nullification_reports;
    ++stats_.repairs;
  }
  dirty_ = false;
  refresh_stats();
  stats_.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void Solver::refresh_stats() {
  stats_.levels.assign(static_cast<std::size_t>(nvars_), {});
  for (std::size_t l = 0; l < stats_.levels.size() && l < hierarchy_.levels.size(); ++l) {
    auto& ls = stats_.levels[l];
    ls.op = hierarchy_.op[l];
    ls.raw = hierarchy_.raw[l];
    ls.polys = hierarchy_.levels[l].polys.size();
    if (hierarchy_.ec[l]) ls.ec = hierarchy_.ec[l]->polynomial.to_string();
  }
  stats_.cells = root_.count() - 1;
  stats_.stacks_lifted = lift_stats_.stacks_lifted;
  stats_.cells_created = lift_stats_.cells_created;
  stats_.cells_preserved = lift_stats_.cells_preserved;
  stats_.tolerated_nullifications = lift_stats_.tolerated_nullifications;
  stats_.proven_unsat_by_propagation = hierarchy_.contradiction;
}

const EngineStats& Solver::stats() {
  build();
  return stats_;
}

const Hierarchy& Solver::hierarchy() {
  build();
  return hierarchy_;
}

const Cell& Solver::root() {
  build();
  return root_;
}

std::vector<std::vector<Polynomial>> Solver::level_sets() {
  build();
  std::vector<std::vector<Polynomial>> out;
  for (const auto& l : hierarchy_.levels) out.push_back(l.polynomials());
  return out;
}

bool Solver::leaf_truth(Cell& leaf) {
  auto sign = [&leaf](const Polynomial& p) {
    for (const auto& [q, s] : leaf.signs)
      if (q == p) return s;
    int s = sign_at(p, leaf.sample);
    leaf.signs.emplace_back(p, s);
    return s;
  };
  bool value = true;
  for (const auto& [id, f] : constraints_) {
    if (!f.evaluate(sign)) {
      value = false;
      break;
    }
  }
  leaf.truth = value ? Truth::true_ : Truth::false_;
  return value;
}

std::optional<bool> Solver::find_true_leaf(Cell& c, Verdict& out) {
  if (c.pruned) {
    c.truth = Truth::false_;
    return std::nullopt;
  }
  if (c.level() == nvars_) {
    if (!leaf_truth(c)) return std::nullopt;
    out.kind = Verdict::Kind::sat;
    out.witness = c.sample;
    out.witness_index = c.index;
    return true;
  }
  for (auto& child : c.children)
    if (find_true_leaf(child, out)) return true;
  return std::nullopt;
}

Verdict Solver::check_sat() {
  build();
  for (auto q : prefix_)
    if (q != Quantifier::free) throw EngineError("check-sat needs a quantifier-free formula; use decide");
  Verdict v;
  v.kind = Verdict::Kind::unsat;
  if (hierarchy_.contradiction) return v;
  if (!find_true_leaf(root_, v)) return v;
  // independent validation of the witness on every atom
  SamplePoint w = *v.witness;
  auto sign = [&w](const Polynomial& p) { return sign_at(p, w); };
  for (const auto& [id, f] : constraints_)
    if (!f.evaluate(sign)) throw std::logic_error("witness failed validation");
  return v;
}

bool Solver::decide_cell(Cell& c) {
  bool value;
  if (c.pruned) {
    value = false;
  } else if (c.level() == nvars_) {
    return leaf_truth(c);
  } else if (prefix_[static_cast<std::size_t>(c.level())] == Quantifier::forall) {
    value = std::all_of(c.children.begin(), c.children.end(), [this](Cell& ch) { return decide_cell(ch); });
  } else {
    value = std::any_of(c.children.begin(), c.children.end(), [this](Cell& ch) { return decide_cell(ch); });
  }
  c.truth = value ? Truth::true_ : Truth::false_;
  return value;
}

Verdict Solver::decide() {
  build();
  const auto quantified = std::count_if(prefix_.begin(), prefix_.end(), [](Quantifier q) { return q != Quantifier::free; });
  if (quantified != nvars_) {
    if (quantified == 0) throw EngineError("decide needs every variable quantified (free variables present)");
    throw EngineError("mixed quantified and free variables are not supported");
  }
  Verdict v;
  bool value = hierarchy_.contradiction ? false : decide_cell(root_);
  v.kind = value ? Verdict::Kind::true_ : Verdict::Kind::false_;
  return v;
}

void Solver::collect_true(Cell& c, std::vector<TrueCell>& out) {
  if (c.pruned) return;
  if (c.level() == nvars_) {
    if (leaf_truth(c)) out.push_back({c.index, c.sample});
    return;
  }
  for (auto& child : c.children) collect_true(child, out);
}

std::vector<TrueCell> Solver::true_cells() {
  build();
  for (auto q : prefix_)
    if (q != Quantifier::free) throw EngineError("true_cells needs a quantifier-free formula");
  std::vector<TrueCell> out;
  collect_true(root_, out);
  return out;
}

}  // namespace cadec
