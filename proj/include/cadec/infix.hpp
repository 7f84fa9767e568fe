#pragma once

// Infix polynomial syntax, e.g. "x^2 + 3/2*x*y - 1", used by tests, bench
// output and diagnostics.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cadec/polynomial.hpp"

namespace cadec {

class InfixSyntaxError : public std::invalid_argument {
 public:
  InfixSyntaxError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses an infix polynomial. Identifiers resolve against `names`; when
/// `names` is empty the defaults x, y, z, w, x4, x5, ... are used.
Polynomial parse_infix(std::string_view text, const std::vector<std::string>& names = {});

}  // namespace cadec
