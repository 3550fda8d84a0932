#pragma once

#include "stardef/element.hpp"

#include <string_view>

namespace stardef {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x'k | 'p'k | '(' expr ')'
// Variables are 1-based; x1..xn and p1..pn are valid for dimension n.
// Throws ParseError carrying the byte offset of the failure.
Polynomial parse_polynomial(std::string_view src, int dim);

// A sum of terms, each optionally followed by "#g<k>" for group element k
// (default 0, the identity): "x1^2 + (x1 + x2)*x2#g1".
Element parse_group_algebra_element(std::string_view src, int dim, int group_order);

} // namespace stardef
