#include "cadec/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace cadec {

ParseError::ParseError(SourcePos p, const std::string& message)
    : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.column) + ": " + message),
      pos(p),
      detail(message) {}

namespace {

struct SExpr {
  bool is_list = false;
  std::string text;
  std::vector<SExpr> items;
  SourcePos pos;

  bool is_symbol(std::string_view s) const { return !is_list && text == s; }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    while (true) {
      skip_space();
      if (at_end()) return out;
      if (peek() == ')') throw ParseError(pos_, "unexpected ')'; expected '(' or end of input");
      if (peek() != '(') throw ParseError(pos_, "expected '(' to start a command");
      out.push_back(read());
    }
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';' || c == '"';
  }

  SExpr read() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input; expected ')' or a term");
    SExpr e;
    e.pos = pos_;
    if (peek() == '(') {
      e.is_list = true;
      advance();
      while (true) {
        skip_space();
        if (at_end()) throw ParseError(pos_, "unexpected end of input; expected ')'");
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (peek() == ')') throw ParseError(pos_, "unexpected ')'; expected a term");
    if (peek() == '"') {
      e.text += '"';
      advance();
      while (true) {
        if (at_end()) throw ParseError(pos_, "unterminated string literal");
        char c = peek();
        advance();
        e.text += c;
        if (c == '"') {
          if (!at_end() && peek() == '"') {
            e.text += '"';
            advance();
            continue;
          }
          return e;
        }
      }
    }
    if (peek() == '|') {
      advance();
      while (!at_end() && peek() != '|') {
        e.text += peek();
        advance();
      }
      if (at_end()) throw ParseError(pos_, "unterminated quoted symbol");
      advance();
      return e;
    }
    while (!at_end() && !delimiter(peek())) {
      e.text += peek();
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<Rational> literal(const std::string& s) {
  if (is_numeral(s)) return Rational(Integer(s, 10));
  auto dot = s.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size()) return std::nullopt;
  std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
  if (!is_numeral(whole) || !is_numeral(frac)) return std::nullopt;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r(Integer(whole + frac, 10), den);
  r.canonicalize();
  return r;
}

const std::map<std::string, Relation, std::less<>> kRelations{
    {"=", Relation::eq}, {"<", Relation::lt}, {"<=", Relation::le}, {">", Relation::gt}, {">=", Relation::ge}};

bool is_formula_head(const std::string& s) {
  return kRelations.count(s) || s == "and" || s == "or" || s == "not" || s == "forall" || s == "exists" ||
         s == "distinct" || s == "=>" || s == "true" || s == "false";
}

class Builder {
 public:
  explicit Builder(const std::vector<std::string>& order) {
    for (const auto& name : order) {
      if (index_.count(name)) throw ParseError({}, "variable '" + name + "' appears twice in the order");
      index_[name] = static_cast<int>(script_.variables.size());
      script_.variables.push_back(name);
    }
  }

  Script finish(std::vector<SExpr> exprs) {
    for (auto& e : exprs) command(e);
    for (const auto& name : script_.variables)
      if (!declared_.count(name)) throw ParseError({}, "variable '" + name + "' from the order is never declared");
    return std::move(script_);
  }

 private:
  static void expect_args(const SExpr& e, std::size_t n, const std::string& what) {
    if (e.items.size() != n + 1)
      throw ParseError(e.pos, "'" + what + "' expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") +
                                  ", got " + std::to_string(e.items.size() - 1));
  }

  static const std::string& symbol(const SExpr& e, const std::string& what) {
    if (e.is_list || e.text.empty() || e.text.front() == '"' || literal(e.text))
      throw ParseError(e.pos, "expected " + what);
    return e.text;
  }

  int declare(const SExpr& at, const std::string& name, bool allow_existing) {
    if (declared_.count(name)) {
      if (allow_existing) return index_.at(name);
      throw ParseError(at.pos, "variable '" + name + "' is already declared");
    }
    if (is_formula_head(name) || name == "+" || name == "-" || name == "*" || name == "/")
      throw ParseError(at.pos, "'" + name + "' cannot be used as a variable name");
    declared_.insert(name);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (script_.variables.size() >= static_cast<std::size_t>(kMaxVars))
      throw ParseError(at.pos, "too many variables (at most " + std::to_string(kMaxVars) + ")");
    const int idx = static_cast<int>(script_.variables.size());
    index_[name] = idx;
    script_.variables.push_back(name);
    return idx;
  }

  static void expect_real(const SExpr& sort) {
    if (!sort.is_symbol("Real")) throw ParseError(sort.pos, "expected sort 'Real'");
  }

  Polynomial term(const SExpr& e) {
    if (!e.is_list) {
      if (auto v = literal(e.text)) return Polynomial(*v);
      if (is_formula_head(e.text)) throw ParseError(e.pos, "expected an arithmetic term, found a formula");
      auto it = index_.find(e.text);
      if (it == index_.end() || !declared_.count(e.text)) throw ParseError(e.pos, "unknown variable '" + e.text + "'");
      return Polynomial::variable(it->second);
    }
    if (e.items.empty()) throw ParseError(e.pos, "empty term; expected an operator");
    const SExpr& head = e.items.front();
    if (head.is_list) throw ParseError(head.pos, "expected one of '+', '-', '*', '/'");
    const std::string& op = head.text;
    const std::size_t n = e.items.size() - 1;
    if (op == "+" || op == "*") {
      if (n < 1) throw ParseError(e.pos, "'" + op + "' expects at least 1 argument");
      Polynomial acc = term(e.items[1]);
      for (std::size_t i = 2; i <= n; ++i) {
        if (op == "+")
          acc += term(e.items[i]);
        else
          acc *= term(e.items[i]);
      }
      return acc;
    }
    if (op == "-") {
      if (n < 1) throw ParseError(e.pos, "'-' expects at least 1 argument");
      Polynomial acc = term(e.items[1]);
      if (n == 1) return -acc;
      for (std::size_t i = 2; i <= n; ++i) acc -= term(e.items[i]);
      return acc;
    }
    if (op == "/") {
      expect_args(e, 2, "/");
      Polynomial num = term(e.items[1]), den = term(e.items[2]);
      if (!num.is_constant() || !den.is_constant())
        throw ParseError(e.pos, "division is only allowed between constants");
      if (den.is_zero()) throw ParseError(e.items[2].pos, "division by zero");
      return Polynomial(num.constant_value() / den.constant_value());
    }
    if (is_formula_head(op)) throw ParseError(e.pos, "expected an arithmetic term, found a formula");
    throw ParseError(head.pos, "unknown function '" + op + "'; expected one of '+', '-', '*', '/'");
  }

  Formula formula(const SExpr& e) {
    if (!e.is_list) {
      if (e.text == "true") return Formula::constant(true);
      if (e.text == "false") return Formula::constant(false);
      throw ParseError(e.pos, "expected a formula");
    }
    if (e.items.empty() || e.items.front().is_list) throw ParseError(e.pos, "expected a formula");
    const std::string& op = e.items.front().text;
    const std::size_t n = e.items.size() - 1;
    if (auto rel = kRelations.find(op); rel != kRelations.end()) {
      expect_args(e, 2, op);
      return Formula::atom(term(e.items[1]) - term(e.items[2]), rel->second);
    }
    if (op == "and" || op == "or") {
      if (n < 1) throw ParseError(e.pos, "'" + op + "' expects at least 1 argument");
      std::vector<Formula> args;
      for (std::size_t i = 1; i <= n; ++i) args.push_back(formula(e.items[i]));
      return op == "and" ? Formula::conj(std::move(args)) : Formula::disj(std::move(args));
    }
    if (op == "not") {
      expect_args(e, 1, "not");
      return Formula::neg(formula(e.items[1]));
    }
    if (op == "forall" || op == "exists")
      throw ParseError(e.pos, "quantifiers are only allowed as the prefix of an assertion");
    if (op == "distinct" || op == "=>") throw ParseError(e.pos, "'" + op + "' is not supported");
    if (op == "+" || op == "-" || op == "*" || op == "/") throw ParseError(e.pos, "expected a formula, found a term");
    throw ParseError(e.items.front().pos, "unknown predicate '" + op + "'; expected a relation or connective");
  }

  void assertion(const SExpr& e, Command& c) {
    expect_args(e, 1, "assert");
    const SExpr* body = &e.items[1];
    while (body->is_list && body->items.size() == 3 &&
           (body->items[0].is_symbol("forall") || body->items[0].is_symbol("exists"))) {
      const Quantifier q = body->items[0].text == "forall" ? Quantifier::forall : Quantifier::exists;
      const SExpr& binders = body->items[1];
      if (!binders.is_list || binders.items.empty()) throw ParseError(binders.pos, "expected a list of (name Real) binders");
      for (const auto& b : binders.items) {
        if (!b.is_list || b.items.size() != 2) throw ParseError(b.pos, "expected a binder (name Real)");
        const std::string& name = symbol(b.items[0], "a variable name");
        expect_real(b.items[1]);
        for (const auto& [bound, _] : c.prefix)
          if (bound == name) throw ParseError(b.pos, "variable '" + name + "' is bound twice");
        declare(b.items[0], name, true);
        c.prefix.emplace_back(name, q);
      }
      body = &body->items[2];
    }
    if (body->is_list && !body->items.empty() &&
        (body->items[0].is_symbol("forall") || body->items[0].is_symbol("exists")))
      throw ParseError(body->pos, "malformed quantifier; expected (forall ((x Real) ...) formula)");
    c.formula = formula(*body);
  }

  static int scope_count(const SExpr& e) {
    if (e.items.size() == 1) return 1;
    if (e.items.size() != 2 || !is_numeral(e.items[1].text))
      throw ParseError(e.pos, "'" + e.items[0].text + "' expects an optional numeral");
    return std::stoi(e.items[1].text);
  }

  void command(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items.front().is_list) throw ParseError(e.pos, "expected a command name");
    Command c;
    c.pos = e.pos;
    const std::string& name = e.items.front().text;
    if (name == "declare-fun") {
      expect_args(e, 3, name);
      const SExpr& params = e.items[2];
      if (!params.is_list || !params.items.empty()) throw ParseError(params.pos, "expected '()'; only constants are supported");
      expect_real(e.items[3]);
      c.kind = Command::Kind::declare_var;
      c.name = symbol(e.items[1], "a variable name");
      declare(e.items[1], c.name, false);
    } else if (name == "declare-const") {
      expect_args(e, 2, name);
      expect_real(e.items[2]);
      c.kind = Command::Kind::declare_var;
      c.name = symbol(e.items[1], "a variable name");
      declare(e.items[1], c.name, false);
    } else if (name == "assert") {
      c.kind = Command::Kind::assert_;
      assertion(e, c);
    } else if (name == "push" || name == "pop") {
      c.kind = name == "push" ? Command::Kind::push : Command::Kind::pop;
      c.count = scope_count(e);
    } else if (name == "check-sat" || name == "decide" || name == "get-model" || name == "get-cells" || name == "exit") {
      expect_args(e, 0, name);
      c.kind = name == "check-sat"   ? Command::Kind::check_sat
               : name == "decide"    ? Command::Kind::decide
               : name == "get-model" ? Command::Kind::get_model
               : name == "get-cells" ? Command::Kind::get_cells
                                     : Command::Kind::exit;
    } else if (name == "set-option") {
      expect_args(e, 2, name);
      const SExpr& key = e.items[1];
      if (key.is_list || key.text.size() < 2 || key.text.front() != ':') throw ParseError(key.pos, "expected an option keyword like :operator");
      if (e.items[2].is_list) throw ParseError(e.items[2].pos, "expected an option value");
      c.kind = Command::Kind::set_option;
      c.name = key.text.substr(1);
      c.value = e.items[2].text;
    } else if (name == "set-logic") {
      expect_args(e, 1, name);
      c.kind = Command::Kind::set_logic;
      c.name = symbol(e.items[1], "a logic name");
    } else {
      throw ParseError(e.items.front().pos,
                       "unknown command '" + name +
                           "'; expected one of declare-fun, declare-const, assert, push, pop, check-sat, decide, "
                           "get-model, get-cells, set-option, set-logic, exit");
    }
    script_.commands.push_back(std::move(c));
  }

  Script script_;
  std::map<std::string, int> index_;
  std::set<std::string> declared_;
};

std::string smt_number(const Rational& c) {
  Rational a = abs(c);
  std::string s = a.get_den() == 1 ? a.get_num().get_str() : "(/ " + a.get_num().get_str() + " " + a.get_den().get_str() + ")";
  return sgn(c) < 0 ? "(- " + s + ")" : s;
}

}  // namespace

Script parse_script(std::string_view text, const std::vector<std::string>& order) {
  Reader reader(text);
  auto exprs = reader.read_all();
  Builder builder(order);
  return builder.finish(std::move(exprs));
}

std::string smt_term(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::string> factors;
    for (int v = 0; v < kMaxVars; ++v)
      for (int k = 0; k < t.mono[v]; ++k)
        factors.push_back(static_cast<std::size_t>(v) < names.size() ? names[static_cast<std::size_t>(v)] : default_var_name(v));
    if (factors.empty()) {
      terms.push_back(smt_number(t.coeff));
      continue;
    }
    if (t.coeff != 1) factors.insert(factors.begin(), smt_number(t.coeff));
    if (factors.size() == 1) {
      terms.push_back(factors.front());
      continue;
    }
    std::string s = "(*";
    for (const auto& f : factors) s += " " + f;
    terms.push_back(s + ")");
  }
  if (terms.size() == 1) return terms.front();
  std::string s = "(+";
  for (const auto& t : terms) s += " " + t;
  return s + ")";
}

std::string smt_formula(const Formula& f, const std::vector<std::string>& names) {
  auto join = [&](const char* op) {
    std::string s = std::string("(") + op;
    for (const auto& a : f.args) s += " " + smt_formula(a, names);
    return s + ")";
  };
  switch (f.kind) {
    case Formula::Kind::atom:
      if (f.rel == Relation::ne) return "(not (= " + smt_term(f.poly, names) + " 0))";
      return std::string("(") + to_string(f.rel) + " " + smt_term(f.poly, names) + " 0)";
    case Formula::Kind::conj: return join("and");
    case Formula::Kind::disj: return join("or");
    case Formula::Kind::neg: return join("not");
    case Formula::Kind::constant: return f.value ? "true" : "false";
  }
  return "?";
}

std::string print_script(const Script& script) {
  const auto& names = script.variables;
  std::string out;
  for (const auto& c : script.commands) {
    switch (c.kind) {
      case Command::Kind::declare_var: out += "(declare-fun " + c.name + " () Real)"; break;
      case Command::Kind::assert_: {
        std::string body = smt_formula(c.formula, names);
        for (auto it = c.prefix.rbegin(); it != c.prefix.rend(); ++it)
          body = std::string("(") + (it->second == Quantifier::forall ? "forall" : "exists") + " ((" + it->first +
                 " Real)) " + body + ")";
        out += "(assert " + body + ")";
        break;
      }
      case Command::Kind::push: out += "(push " + std::to_string(c.count) + ")"; break;
      case Command::Kind::pop: out += "(pop " + std::to_string(c.count) + ")"; break;
      case Command::Kind::check_sat: out += "(check-sat)"; break;
      case Command::Kind::decide: out += "(decide)"; break;
      case Command::Kind::get_model: out += "(get-model)"; break;
      case Command::Kind::get_cells: out += "(get-cells)"; break;
      case Command::Kind::set_option: out += "(set-option :" + c.name + " " + c.value + ")"; break;
      case Command::Kind::set_logic: out += "(set-logic " + c.name + ")"; break;
      case Command::Kind::exit: out += "(exit)"; break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace cadec
