#pragma once

// Executes parsed scripts against one live Solver.

#include <iosfwd>
#include <optional>
#include <string>

#include "cadec/engine.hpp"
#include "cadec/script.hpp"

namespace cadec {

enum class SolveMode { auto_, sat, decide };

struct DriverOptions {
  EngineOptions engine;
  SolveMode mode = SolveMode::auto_;
  bool stats = false;
  bool json = false;
  /// Maximum width of the decimal enclosure printed for model coordinates.
  Rational model_width{1, 1000000};
};

/// Exit codes of a run.
inline constexpr int kExitSatOrTrue = 0;
inline constexpr int kExitUnsatOrFalse = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitBudget = 3;

/// Runs `script`, writing results to `out` and diagnostics to `err`.
/// Returns the exit code: that of the last verdict, 0 when there is none.
int run_script(const Script& script, const DriverOptions& options, std::ostream& out, std::ostream& err);

std::optional<Operator> parse_operator(const std::string& name);
/// Accepts integers, decimals and n/d fractions.
std::optional<Rational> parse_rational(const std::string& text);

/// Coordinate i of `s` as text: the exact value, or the defining polynomial
/// with a decimal enclosure of width at most `width`.
std::string format_coordinate(SamplePoint& s, std::size_t i, const std::string& name, const Rational& width);

/// Stats as a single-line JSON document.
std::string stats_json(const EngineStats& stats, const std::vector<std::string>& names);

}  // namespace cadec
