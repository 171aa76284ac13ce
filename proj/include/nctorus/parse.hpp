#pragma once

// Text grammars used by the command line.
//
// Element literals: sums and products of numbers, "p/q", "i", "t^k", "U^m",
// "V^n" and parenthesised sub-expressions; juxtaposition multiplies, so
// "(2+3i) * t^-1 * U^2 V^-3" and "2 + 3i t^-1 U^2V^-3" are both valid. Products
// follow the algebra: "V U" is t^2 U V. Whitespace is ignored.
//
// Automorphism specs: "mod(a,b,c,d)", "sigma", "kappa", "flip", "gamma1",
// "gamma2", "gamma3", "id", "custom(<U image>; <V image>)", chained with "."
// or "∘"; the rightmost map is applied first.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nctorus/automorphism.hpp"
#include "nctorus/nc_element.hpp"

namespace nct {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

NcElement parse_element(std::string_view text);

/// DeterminantError propagates for mod(...) with ad - bc != 1; invalid custom
/// images raise InvalidAutomorphism.
AutomorphismSpec parse_spec(std::string_view text);

}  // namespace nct
