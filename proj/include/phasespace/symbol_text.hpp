#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phasespace/symweyl.hpp"

namespace phasespace {

// Grammar for polynomial symbols (whitespace ignored):
//
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := power { ['*'] power | '/' power }     juxtaposition multiplies;
//                                                   divisors must be nonzero constants
//   power  := atom [ '^' integer ]
//   atom   := integer | 'i' | 'q' | 'p' | '(' expr ')'
//
// e.g. "q^2*p - (1/2)i", "3q p^2/4", "(1 + 2i)(q - p)^2".
// to_string emits this grammar and parse_symbol(to_string(A)) == A exactly.

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position;
};

PolySymbol parse_symbol(std::string_view text);
std::string to_string(const PolySymbol& A);

/// Joins (coefficient, monomial text) pairs with the sign and coefficient
/// conventions above.  An empty monomial denotes a constant.
std::string format_sum(const std::vector<std::pair<QComplex, std::string>>& terms);

}  // namespace phasespace
