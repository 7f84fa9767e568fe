#include "cadec/projection.hpp"

#include <algorithm>

#include "cadec/polyalg.hpp"

namespace cadec {

IdSet merge(const IdSet& a, const IdSet& b) {
  IdSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

const char* to_string(Operator op) {
  switch (op) {
    case Operator::reduced: return "ec-reduced";
    case Operator::mccallum: return "mccallum";
    case Operator::collins: return "collins";
  }
  return "?";
}

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::input: return "input";
    case Rule::coefficient: return "coefficient";
    case Rule::discriminant: return "discriminant";
    case Rule::resultant: return "resultant";
    case Rule::psc: return "psc";
    case Rule::content: return "content";
  }
  return "?";
}

Operator escalate(Operator op) { return op == Operator::reduced ? Operator::mccallum : Operator::collins; }

std::vector<Polynomial> ProjectionLevel::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.poly);
  return out;
}

const ProjPoly* ProjectionLevel::find(const Polynomial& p) const {
  for (const auto& q : polys)
    if (q.poly == p) return &q;
  return nullptr;
}

// ---------------------------------------------------------------------------

Polynomial ProjectionCache::resultant(const Polynomial& a, const Polynomial& b, Var v) {
  Key key{'r', v, a, b};
  auto it = table_.find(key);
  if (it == table_.end()) it = table_.emplace(key, std::vector<Polynomial>{cadec::resultant(a, b, v)}).first;
  return it->second.front();
}

Polynomial ProjectionCache::discriminant(const Polynomial& a, Var v) {
  Key key{'d', v, a, Polynomial{}};
  auto it = table_.find(key);
  if (it == table_.end()) it = table_.emplace(key, std::vector<Polynomial>{cadec::discriminant(a, v)}).first;
  return it->second.front();
}

const std::vector<Polynomial>& ProjectionCache::psc(const Polynomial& a, const Polynomial& b, Var v) {
  Key key{'p', v, a, b};
  auto it = table_.find(key);
  if (it == table_.end()) it = table_.emplace(key, subresultant_psc(a, b, v)).first;
  return it->second;
}

Polynomial ProjectionCache::gcd(const Polynomial& a, const Polynomial& b) {
  Key key = a < b ? Key{'g', 0, a, b} : Key{'g', 0, b, a};
  auto it = table_.find(key);
  if (it == table_.end()) it = table_.emplace(key, std::vector<Polynomial>{cadec::gcd(a, b)}).first;
  return it->second.front();
}

namespace {

Polynomial res_of(ProjectionCache* cache, const Polynomial& a, const Polynomial& b, Var v) {
  return cache ? cache->resultant(a, b, v) : resultant(a, b, v);
}

Polynomial disc_of(ProjectionCache* cache, const Polynomial& a, Var v) {
  return cache ? cache->discriminant(a, v) : discriminant(a, v);
}

std::vector<Polynomial> psc_of(ProjectionCache* cache, const Polynomial& a, const Polynomial& b, Var v) {
  return cache ? cache->psc(a, b, v) : subresultant_psc(a, b, v);
}

Polynomial gcd_of(ProjectionCache* cache, const Polynomial& a, const Polynomial& b) {
  return cache ? cache->gcd(a, b) : gcd(a, b);
}

/// Merges equal polynomials; output sorted.
std::vector<ProjPoly> dedupe(const std::vector<ProjPoly>& polys) {
  std::map<Polynomial, ProjPoly> by_poly;
  for (const auto& p : polys) {
    auto [it, fresh] = by_poly.try_emplace(p.poly, p);
    if (fresh) continue;
    it->second.origin = merge(it->second.origin, p.origin);
    if (p.rule == Rule::input) it->second.rule = Rule::input;
  }
  std::vector<ProjPoly> out;
  out.reserve(by_poly.size());
  for (auto& [k, p] : by_poly) out.push_back(std::move(p));
  return out;
}

class Emitter {
 public:
  Emitter(Operator op, Projected& out) : op_(op), out_(out) {}

  void emit(const Polynomial& p, const IdSet& origin, Rule rule) {
    ++out_.raw.total;
    switch (rule) {
      case Rule::coefficient: ++out_.raw.coefficients; break;
      case Rule::discriminant: ++out_.raw.discriminants; break;
      case Rule::resultant: ++out_.raw.resultants; break;
      case Rule::psc: ++out_.raw.pscs; break;
      default: break;
    }
    for (auto& c : components(p, origin, op_, rule)) gathered_.push_back(std::move(c));
  }

  void finish() { out_.polys = dedupe(gathered_); }

 private:
  Operator op_;
  Projected& out_;
  std::vector<ProjPoly> gathered_;
};

void mccallum_parts(const std::vector<const ProjPoly*>& parts, Var v, const IdSet& extra, Emitter& em,
                    ProjectionCache* cache) {
  for (const ProjPoly* f : parts) {
    IdSet origin = merge(f->origin, extra);
    for (const auto& c : f->poly.coefficients(v))
      if (!c.is_zero()) em.emit(c, origin, Rule::coefficient);
    if (f->poly.degree(v) >= 2) em.emit(disc_of(cache, f->poly, v), origin, Rule::discriminant);
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      em.emit(res_of(cache, parts[i]->poly, parts[j]->poly, v), merge(merge(parts[i]->origin, parts[j]->origin), extra),
              Rule::resultant);
}

/// Reducta red^0 = f, red^1, ... kept while the previous leading coefficient
/// may vanish (is not constant).
std::vector<Polynomial> reducta(const Polynomial& f, Var v) {
  std::vector<Polynomial> out{f};
  while (true) {
    const Polynomial& r = out.back();
    if (r.degree(v) <= 0 || r.leading_coeff(v).is_constant()) break;
    Polynomial next = r.reductum(v);
    if (next.is_zero()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<ProjPoly> components(const Polynomial& p, const IdSet& origin, Operator op, Rule rule) {
  std::vector<ProjPoly> out;
  if (p.is_constant()) return out;
  bool first = true;
  for (auto& c : zero_set_components(p)) {
    out.push_back({normalize_unit(c), origin, op, first ? rule : Rule::content});
    first = false;
  }
  return out;
}

ProjectionLevel make_level(Var level, const std::vector<ProjPoly>& polys, ProjectionCache* cache) {
  std::vector<ProjPoly> uniq = dedupe(polys);
  std::vector<Polynomial> basis;
  for (const auto& u : uniq) {
    if (u.poly.main_var() != level || u.poly.degree(level) < 1)
      throw std::invalid_argument("make_level: polynomial does not belong to this level");
    Polynomial p = u.poly;
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n && !p.is_constant(); ++i) {
      Polynomial g = gcd_of(cache, p, basis[i]);
      if (g.is_constant()) continue;
      Polynomial rest = *divide_exact(basis[i], g);
      basis[i] = g;
      if (!rest.is_constant()) basis.push_back(normalize_unit(rest));
      p = *divide_exact(p, g);
    }
    if (!p.is_constant()) basis.push_back(normalize_unit(p));
  }
  std::sort(basis.begin(), basis.end());

  ProjectionLevel out;
  out.level = level;
  for (auto& b : basis) {
    ProjPoly member{b, {}, Operator::collins, Rule::content};
    bool tagged = false;
    for (const auto& u : uniq) {
      if (!divide_exact(u.poly, b)) continue;
      member.origin = merge(member.origin, u.origin);
      if (!tagged || u.rule == Rule::input) {
        member.op = u.op;
        member.rule = u.rule;
        tagged = true;
      }
    }
    out.polys.push_back(std::move(member));
  }
  return out;
}

Projected project_mccallum(const ProjectionLevel& s, ProjectionCache* cache) {
  Projected out;
  Emitter em(Operator::mccallum, out);
  std::vector<const ProjPoly*> parts;
  for (const auto& p : s.polys) parts.push_back(&p);
  mccallum_parts(parts, s.level, {}, em, cache);
  em.finish();
  if (!s.polys.empty()) out.assumptions.push_back("well-oriented at level " + std::to_string(s.level));
  return out;
}

Projected project_reduced(const ECDesignation& f, const ProjectionLevel& s, ProjectionCache* cache) {
  const Var v = s.level;
  if (f.level != v || !ec_admissible(f.polynomial, v))
    throw PrimitivityError("equational constraint " + f.polynomial.to_string() + " is not primitive of positive degree in its level");
  std::vector<const ProjPoly*> parts;
  std::vector<const ProjPoly*> others;
  for (const auto& p : s.polys) (divide_exact(f.polynomial, p.poly) ? parts : others).push_back(&p);
  std::vector<ProjPoly> own;
  if (parts.empty()) {
    own = make_level(v, components(f.polynomial, f.origin, Operator::reduced, Rule::input), cache).polys;
    for (const auto& p : own) parts.push_back(&p);
  }

  Projected out;
  Emitter em(Operator::reduced, out);
  mccallum_parts(parts, v, f.origin, em, cache);
  for (const ProjPoly* a : parts)
    for (const ProjPoly* g : others)
      em.emit(res_of(cache, a->poly, g->poly, v), merge(merge(a->origin, g->origin), f.origin), Rule::resultant);
  em.finish();
  out.assumptions.push_back("well-oriented at level " + std::to_string(v) + " for " + f.polynomial.to_string());
  return out;
}

Projected project_collins(const ProjectionLevel& s, ProjectionCache* cache) {
  const Var v = s.level;
  Projected out;
  Emitter em(Operator::collins, out);
  std::vector<std::vector<Polynomial>> reds;
  for (const auto& f : s.polys) reds.push_back(reducta(f.poly, v));
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    const IdSet& origin = s.polys[i].origin;
    for (const auto& r : reds[i]) {
      em.emit(r.degree(v) > 0 ? r.leading_coeff(v) : r, origin, Rule::coefficient);
      const int d = r.degree(v);
      if (d < 2) continue;
      auto chain = psc_of(cache, r, r.derivative(v), v);
      for (int j = 0; j < d - 1; ++j) em.emit(chain[static_cast<std::size_t>(j)], origin, Rule::psc);
    }
  }
  for (std::size_t i = 0; i < s.polys.size(); ++i)
    for (std::size_t k = i + 1; k < s.polys.size(); ++k) {
      IdSet origin = merge(s.polys[i].origin, s.polys[k].origin);
      for (const auto& r : reds[i])
        for (const auto& q : reds[k]) {
          if (r.degree(v) < 1 || q.degree(v) < 1) continue;
          const bool swap = r.degree(v) < q.degree(v);
          const Polynomial& a = swap ? q : r;
          const Polynomial& b = swap ? r : q;
          auto chain = psc_of(cache, a, b, v);
          for (int j = 0; j < b.degree(v); ++j) em.emit(chain[static_cast<std::size_t>(j)], origin, Rule::psc);
        }
    }
  em.finish();
  return out;
}

bool ec_admissible(const Polynomial& p, Var level) {
  return !p.is_constant() && p.main_var() == level && is_primitive(p, level);
}

Propagation propagate_ec(const ECDesignation& f1, const ECDesignation& f2, int sequence, ProjectionCache* cache) {
  Propagation out;
  if (f1.level != f2.level) throw std::invalid_argument("propagate_ec: designations at different levels");
  Polynomial r = normalize_unit(res_of(cache, f1.polynomial, f2.polynomial, f1.level));
  if (r.is_zero()) return out;
  if (r.is_constant()) {
    out.contradiction = true;
    return out;
  }
  const Var level = r.main_var();
  if (!ec_admissible(r, level)) return out;
  out.ec = ECDesignation{level, r, merge(f1.origin, f2.origin), ECDesignation::Provenance::propagated, sequence};
  return out;
}

const ECDesignation* choose_ec(const std::vector<ECDesignation>& candidates) {
  const ECDesignation* best = nullptr;
  auto key = [](const ECDesignation& e) {
    return std::tuple(e.polynomial.degree(e.level), e.polynomial.total_degree(), e.sequence);
  };
  for (const auto& c : candidates)
    if (!best || key(c) < key(*best)) best = &c;
  return best;
}

Hierarchy project_hierarchy(int nvars, const std::vector<InputPoly>& inputs,
                            const std::vector<ECDesignation>& ec_candidates, const ProjectionPolicy& policy,
                            ProjectionCache& cache) {
  Hierarchy h;
  h.nvars = nvars;
  h.levels.resize(static_cast<std::size_t>(nvars));
  h.op.assign(static_cast<std::size_t>(nvars), Operator::mccallum);
  h.ec.resize(static_cast<std::size_t>(nvars));
  h.raw.resize(static_cast<std::size_t>(nvars));

  const bool use_ecs = policy.base == Operator::reduced;
  const Operator plain = use_ecs ? Operator::mccallum : policy.base;
  std::vector<std::vector<ProjPoly>> buckets(static_cast<std::size_t>(nvars));
  std::vector<std::vector<ECDesignation>> ecs(static_cast<std::size_t>(nvars));
  auto check_var = [nvars](const Polynomial& p) {
    if (!p.is_constant() && p.main_var() >= nvars) throw std::invalid_argument("polynomial uses an undeclared variable");
  };
  for (const auto& in : inputs) {
    check_var(in.poly);
    for (auto& c : components(in.poly, {in.id}, plain, Rule::input))
      buckets[static_cast<std::size_t>(c.poly.main_var())].push_back(std::move(c));
  }
  if (use_ecs) {
    for (const auto& e : ec_candidates) {
      check_var(e.polynomial);
      if (ec_admissible(e.polynomial, e.level)) ecs[static_cast<std::size_t>(e.level)].push_back(e);
    }
  }
  int sequence = 1 << 20;

  for (int l = nvars - 1; l >= 0; --l) {
    const auto li = static_cast<std::size_t>(l);
    const Var v = static_cast<Var>(l);
    h.levels[li] = make_level(v, buckets[li], &cache);
    Operator op = plain;
    const ECDesignation* chosen = use_ecs ? choose_ec(ecs[li]) : nullptr;
    if (chosen) {
      op = Operator::reduced;
      for (const auto& other : ecs[li]) {
        if (&other == chosen) continue;
        Propagation pr = propagate_ec(*chosen, other, sequence++, &cache);
        if (pr.contradiction && !h.contradiction) {
          h.contradiction = true;
          h.contradiction_origin = merge(chosen->origin, other.origin);
        }
        if (pr.ec) ecs[static_cast<std::size_t>(pr.ec->level)].push_back(*pr.ec);
      }
    }
    if (auto it = policy.floor.find(v); it != policy.floor.end()) op = std::max(op, it->second);
    h.op[li] = op;
    if (op == Operator::reduced) h.ec[li] = *chosen;
    if (l == 0) break;

    Projected proj;
    switch (op) {
      case Operator::collins: proj = project_collins(h.levels[li], &cache); break;
      case Operator::mccallum: proj = project_mccallum(h.levels[li], &cache); break;
      case Operator::reduced: proj = project_reduced(*chosen, h.levels[li], &cache); break;
    }
    h.raw[li] = proj.raw;
    for (auto& a : proj.assumptions) h.assumptions.push_back(std::move(a));
    for (auto& p : proj.polys) buckets[static_cast<std::size_t>(p.poly.main_var())].push_back(std::move(p));
  }
  return h;
}

}  // namespace cadec
