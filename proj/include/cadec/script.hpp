#pragma once

// SMT-LIB flavoured input scripts: a strict subset of QF_NRA surface syntax
// plus forall/exists prefixes and the extra commands decide and get-cells.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cadec/formula.hpp"

namespace cadec {

struct SourcePos {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos;
  std::string detail;
};

struct Command {
  enum class Kind {
    declare_var,
    assert_,
    push,
    pop,
    check_sat,
    decide,
    get_model,
    get_cells,
    set_option,
    set_logic,
    exit
  };

  Kind kind = Kind::check_sat;
  /// Variable name, option key (without the colon) or logic name.
  std::string name;
  /// Option value as written.
  std::string value;
  Formula formula;
  /// Binders of a quantified assertion, outermost first.
  std::vector<std::pair<std::string, Quantifier>> prefix;
  /// Scope count for push/pop.
  int count = 1;
  /// Where the command starts; not part of equality.
  SourcePos pos;

  friend bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.name == b.name && a.value == b.value && a.formula == b.formula &&
           a.prefix == b.prefix && a.count == b.count;
  }
};

struct Script {
  /// Variable table; polynomial variable i is variables[i].
  std::vector<std::string> variables;
  std::vector<Command> commands;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Parses a script. `order` fixes the indices of the named variables up
/// front (lowest first); every name in it must be declared by the script.
Script parse_script(std::string_view text, const std::vector<std::string>& order = {});

/// Renders a polynomial as an SMT-LIB term.
std::string smt_term(const Polynomial& p, const std::vector<std::string>& names);
std::string smt_formula(const Formula& f, const std::vector<std::string>& names);
/// Prints a script that parses back to an equal Script.
std::string print_script(const Script& script);

}  // namespace cadec
