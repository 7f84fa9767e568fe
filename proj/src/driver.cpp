#include "cadec/driver.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "json.hpp"

namespace cadec {

using nlohmann::json;

std::optional<Operator> parse_operator(const std::string& name) {
  if (name == "collins") return Operator::collins;
  if (name == "mccallum") return Operator::mccallum;
  if (name == "ec-reduced" || name == "reduced") return Operator::reduced;
  return std::nullopt;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  bool neg = false;
  if (s.front() == '-') {
    neg = true;
    s.erase(0, 1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    s.resize(e);
  }
  auto digits = [](const std::string& d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!digits(n) || !digits(d) || Integer(d, 10) == 0) return std::nullopt;
    r = Rational(Integer(n, 10), Integer(d, 10));
  } else {
    auto dot = s.find('.');
    std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!digits(whole) || (dot != std::string::npos && !digits(frac))) return std::nullopt;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    r = Rational(Integer(whole + frac, 10), den);
  }
  r.canonicalize();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent > 0) r *= scale;
  if (exponent < 0) r /= scale;
  return neg ? Rational(-r) : r;
}

namespace {

struct Coordinate {
  std::optional<Rational> exact;
  std::string polynomial;
  std::string lo, hi;
};

Coordinate describe(SamplePoint& s, std::size_t i, const std::string& name, const Rational& width) {
  Coordinate c;
  if (s[i].is_rational()) {
    c.exact = s[i].value();
    return c;
  }
  AlgebraicNumber u = univariate_form(s, i);
  if (u.is_rational()) {
    c.exact = u.value();
    return c;
  }
  int digits = 0;
  Rational step = 1;
  while (step > width / 4) {
    step /= 10;
    ++digits;
  }
  refine(u, width / 2);
  c.polynomial = u.defining().to_string({name});
  c.lo = decimal_string(u.lo(), digits, true);
  c.hi = decimal_string(u.hi(), digits, false);
  return c;
}

json coordinate_json(const Coordinate& c, const std::string& name) {
  json j{{"name", name}};
  if (c.exact) {
    j["value"] = c.exact->get_str();
  } else {
    j["polynomial"] = c.polynomial;
    j["interval"] = {c.lo, c.hi};
  }
  return j;
}

std::string coordinate_text(const Coordinate& c) {
  if (c.exact) return c.exact->get_str();
  return "(root \"" + c.polynomial + "\" (" + c.lo + " " + c.hi + "))";
}

const char* command_name(Command::Kind k) {
  switch (k) {
    case Command::Kind::declare_var: return "declare-fun";
    case Command::Kind::assert_: return "assert";
    case Command::Kind::push: return "push";
    case Command::Kind::pop: return "pop";
    case Command::Kind::check_sat: return "check-sat";
    case Command::Kind::decide: return "decide";
    case Command::Kind::get_model: return "get-model";
    case Command::Kind::get_cells: return "get-cells";
    case Command::Kind::set_option: return "set-option";
    case Command::Kind::set_logic: return "set-logic";
    case Command::Kind::exit: return "exit";
  }
  return "?";
}

json stats_document(const EngineStats& st, const std::vector<std::string>& names) {
  json levels = json::array();
  for (std::size_t l = 0; l < st.levels.size(); ++l) {
    const auto& ls = st.levels[l];
    json raw{{"coefficients", ls.raw.coefficients},
             {"discriminants", ls.raw.discriminants},
             {"resultants", ls.raw.resultants},
             {"pscs", ls.raw.pscs},
             {"total", ls.raw.total}};
    levels.push_back({{"variable", l < names.size() ? names[l] : default_var_name(static_cast<Var>(l))},
                      {"operator", to_string(ls.op)},
                      {"raw", raw},
                      {"polys", ls.polys},
                      {"ec", ls.ec ? json(*ls.ec) : json(nullptr)}});
  }
  return {{"levels", levels},
          {"cells", st.cells},
          {"stacks_lifted", st.stacks_lifted},
          {"cells_created", st.cells_created},
          {"cells_preserved", st.cells_preserved},
          {"tolerated_nullifications", st.tolerated_nullifications},
          {"nullification_reports", st.nullification_reports},
          {"repairs", st.repairs},
          {"ec_removal_escalations", st.ec_removal_escalations},
          {"proven_unsat_by_propagation", st.proven_unsat_by_propagation},
          {"seconds", st.seconds}};
}

using Prefix = std::vector<std::pair<std::string, Quantifier>>;

class Session {
 public:
  Session(const Script& script, const DriverOptions& options, std::ostream& out, std::ostream& err)
      : script_(script),
        names_(script.variables),
        options_(options),
        solver_(static_cast<int>(script.variables.size()), options.engine),
        out_(out),
        err_(err) {
    for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
  }

  int run() {
    int exit = kExitSatOrTrue;
    for (std::size_t k = 0; k < script_.commands.size(); ++k) {
      const Command& c = script_.commands[k];
      try {
        if (c.kind == Command::Kind::exit) break;
        if (auto verdict = execute(c, k + 1)) exit = *verdict;
      } catch (const BudgetExceeded& e) {
        fail(c, k + 1, "budget", e.what());
        return kExitBudget;
      } catch (const std::exception& e) {
        fail(c, k + 1, "error", e.what());
        return kExitError;
      }
    }
    return exit;
  }

 private:
  void fail(const Command& c, std::size_t index, const char* kind, const std::string& message) {
    err_ << (std::string(kind) == "budget" ? "budget exceeded" : "error") << ": command " << index << " ("
         << command_name(c.kind) << ", line " << c.pos.line << ":" << c.pos.column << "): " << message << "\n";
    if (options_.json)
      emit({{"index", index}, {"command", command_name(c.kind)}, {kind == std::string("budget") ? "budget" : "error", message}});
  }

  void emit(const json& j) { out_ << j.dump() << "\n"; }

  json header(const Command& c, std::size_t index) const { return {{"index", index}, {"command", command_name(c.kind)}}; }

  Prefix live_prefix() const {
    Prefix prefix;
    bool seen = false;
    for (const auto& [id, p] : prefixes_) {
      if (seen && p != prefix) throw EngineError("quantified assertions in scope have different prefixes");
      prefix = p;
      seen = true;
    }
    return prefix;
  }

  void check_prefix_order(const Prefix& prefix) const {
    for (std::size_t i = 1; i < prefix.size(); ++i)
      if (index_.at(prefix[i - 1].first) > index_.at(prefix[i].first))
        throw EngineError("quantifier prefix must follow the variable order (" + prefix[i].first + " precedes " +
                          prefix[i - 1].first + "); reorder the declarations or pass --order");
  }

  std::optional<int> execute(const Command& c, std::size_t index) {
    switch (c.kind) {
      case Command::Kind::declare_var:
      case Command::Kind::set_logic:
      case Command::Kind::exit: return std::nullopt;
      case Command::Kind::assert_: {
        check_prefix_order(c.prefix);
        int id = solver_.add_constraint(c.formula);
        scopes_.back().push_back(id);
        if (!c.prefix.empty()) prefixes_[id] = c.prefix;
        model_.reset();
        return std::nullopt;
      }
      case Command::Kind::push:
        for (int i = 0; i < c.count; ++i) scopes_.emplace_back();
        return std::nullopt;
      case Command::Kind::pop: {
        if (static_cast<std::size_t>(c.count) >= scopes_.size()) throw EngineError("pop without a matching push");
        for (int i = 0; i < c.count; ++i) {
          for (auto it = scopes_.back().rbegin(); it != scopes_.back().rend(); ++it) {
            solver_.remove_constraint(*it);
            prefixes_.erase(*it);
          }
          scopes_.pop_back();
        }
        model_.reset();
        return std::nullopt;
      }
      case Command::Kind::check_sat:
      case Command::Kind::decide: return solve(c, index);
      case Command::Kind::get_model: get_model(c, index); return std::nullopt;
      case Command::Kind::get_cells: get_cells(c, index); return std::nullopt;
      case Command::Kind::set_option: set_option(c); return std::nullopt;
    }
    return std::nullopt;
  }

  int solve(const Command& c, std::size_t index) {
    const Prefix prefix = live_prefix();
    bool decide = c.kind == Command::Kind::decide || options_.mode == SolveMode::decide ||
                  (options_.mode == SolveMode::auto_ && !prefix.empty());
    Verdict v;
    if (decide) {
      std::vector<Quantifier> q(names_.size(), Quantifier::free);
      for (const auto& [name, quant] : prefix) q[static_cast<std::size_t>(index_.at(name))] = quant;
      solver_.set_quantifiers(q);
      v = solver_.decide();
    } else {
      if (!prefix.empty()) throw EngineError("check-sat in sat mode needs quantifier-free assertions");
      solver_.set_quantifiers({});
      v = solver_.check_sat();
      if (v.kind == Verdict::Kind::sat) model_ = v.witness;
    }
    const char* verdict = to_string(v.kind);
    if (options_.json) {
      json j = header(c, index);
      j["result"] = verdict;
      if (options_.stats) j["stats"] = stats_document(solver_.stats(), names_);
      emit(j);
    } else {
      out_ << verdict << "\n";
      if (options_.stats) err_ << stats_document(solver_.stats(), names_).dump() << "\n";
    }
    return v.kind == Verdict::Kind::sat || v.kind == Verdict::Kind::true_ ? kExitSatOrTrue : kExitUnsatOrFalse;
  }

  void get_model(const Command& c, std::size_t index) {
    if (!model_) throw EngineError("no model available; the last check-sat must have answered sat");
    SamplePoint s = *model_;
    json j = header(c, index);
    j["model"] = json::array();
    std::string text = "(model\n";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      Coordinate co = describe(s, i, names_[i], width_());
      j["model"].push_back(coordinate_json(co, names_[i]));
      text += "  (" + names_[i] + " " + coordinate_text(co) + ")\n";
    }
    if (options_.json)
      emit(j);
    else
      out_ << text << ")\n";
  }

  void get_cells(const Command& c, std::size_t index) {
    if (!live_prefix().empty()) throw EngineError("get-cells needs quantifier-free assertions");
    solver_.set_quantifiers({});
    auto cells = solver_.true_cells();
    json j = header(c, index);
    j["cells"] = json::array();
    std::string text = "(cells\n";
    for (auto& cell : cells) {
      json cj{{"index", cell.index}, {"sample", json::array()}};
      std::string line = "  (cell (index";
      for (int k : cell.index) line += " " + std::to_string(k);
      line += ")";
      for (std::size_t i = 0; i < names_.size(); ++i) {
        Coordinate co = describe(cell.sample, i, names_[i], width_());
        cj["sample"].push_back(coordinate_json(co, names_[i]));
        line += " (" + names_[i] + " " + coordinate_text(co) + ")";
      }
      j["cells"].push_back(cj);
      text += line + ")\n";
    }
    if (options_.json)
      emit(j);
    else
      out_ << text << ")\n";
  }

  void set_option(const Command& c) {
    EngineOptions eng = solver_.options();
    const std::string& v = c.value;
    auto boolean = [&]() {
      if (v != "true" && v != "false") throw EngineError("option :" + c.name + " expects true or false");
      return v == "true";
    };
    if (c.name == "operator") {
      auto op = parse_operator(v);
      if (!op) throw EngineError("unknown operator '" + v + "'; expected collins, mccallum or ec-reduced");
      eng.policy = *op;
    } else if (c.name == "product-ec") {
      eng.product_ec = boolean();
    } else if (c.name == "cell-cap") {
      auto r = parse_rational(v);
      if (!r || r->get_den() != 1 || sgn(*r) <= 0) throw EngineError("option :cell-cap expects a positive integer");
      eng.cell_cap = static_cast<std::size_t>(r->get_num().get_d());
    } else if (c.name == "time-cap") {
      auto r = parse_rational(v);
      if (!r || sgn(*r) <= 0) throw EngineError("option :time-cap expects a positive number of seconds");
      eng.time_cap_seconds = r->get_d();
    } else if (c.name == "model-width") {
      auto r = parse_rational(v);
      if (!r || sgn(*r) <= 0) throw EngineError("option :model-width expects a positive number");
      width_override_ = *r;
    } else {
      err_ << "warning: ignoring unsupported option :" << c.name << "\n";
      return;
    }
    solver_.set_options(eng);
  }

  Rational width_() const { return width_override_ ? *width_override_ : options_.model_width; }

  const Script& script_;
  const std::vector<std::string>& names_;
  DriverOptions options_;
  Solver solver_;
  std::ostream& out_;
  std::ostream& err_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> scopes_{1};
  std::map<int, Prefix> prefixes_;
  std::optional<SamplePoint> model_;
  std::optional<Rational> width_override_;
};

}  // namespace

std::string format_coordinate(SamplePoint& s, std::size_t i, const std::string& name, const Rational& width) {
  return coordinate_text(describe(s, i, name, width));
}

std::string stats_json(const EngineStats& stats, const std::vector<std::string>& names) {
  return stats_document(stats, names).dump();
}

int run_script(const Script& script, const DriverOptions& options, std::ostream& out, std::ostream& err) {
  Session session(script, options, out, err);
  return session.run();
}

}  // namespace cadec
